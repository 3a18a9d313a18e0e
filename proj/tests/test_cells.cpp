#include <catch2/catch_amalgamated.hpp>

#include "ayc/cells.hpp"

#include <map>
#include <random>

using namespace ayc;

TEST_CASE("generalized descent classes") {
  auto a2 = CoxeterSystem::from_type("A2");
  SECTION("A empty gives the whole group") {
    auto k = generalized_descent_class(a2, a2.empty_refl_set(), a2.empty_refl_set());
    CHECK(k.size() == a2.order());
  }
  SECTION("A = T, D = S is empty in a noncommutative group") {
    auto k = generalized_descent_class(a2, a2.full_refl_set(), a2.simple_refl_set());
    CHECK(k.size() == 0);
  }
  SECTION("S3: A = S, D = {s1}") {
    ReflSet d = a2.empty_refl_set();
    d.set(a2.refl_of_gen(0));
    auto k = generalized_descent_class(a2, a2.simple_refl_set(), d);
    std::vector<Elem> expect = {a2.gen(0), a2.element_of_word({0, 1})};
    std::sort(expect.begin(), expect.end());
    CHECK(k.members == expect);
  }
  SECTION("D must be inside A") {
    ReflSet d = a2.empty_refl_set();
    d.set(a2.refl_of_gen(0));
    CHECK_THROWS_AS(generalized_descent_class(a2, a2.empty_refl_set(), d), error);
  }
}

TEST_CASE("A-cells") {
  auto a2 = CoxeterSystem::from_type("A2");
  Elem w = a2.element_of_word({0, 1});
  SECTION("A = T isolates the element") {
    auto k = a_cell(a2, a2.full_refl_set(), w);
    CHECK(k.members == std::vector<Elem>{w});
  }
  SECTION("A empty gives the whole group") {
    CHECK(a_cell(a2, a2.empty_refl_set(), w).size() == a2.order());
  }
  SECTION("cells coincide with nonempty descent classes (Tits machinery)") {
    auto a3 = CoxeterSystem::from_type("A3");
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      ReflSet A = a3.empty_refl_set();
      for (int t = 0; t < a3.num_reflections(); ++t)
        if (rng() & 1) A.set(t);
      // group elements by Des_A: exactly the nonempty W_A^D
      std::map<std::vector<bool>, std::vector<Elem>> classes;
      for (Elem v = 0; v < static_cast<Elem>(a3.order()); ++v) {
        auto d = a3.descent_set(v, A);
        std::vector<bool> key(d.size());
        for (size_t i = 0; i < d.size(); ++i) key[i] = d.test(i);
        classes[key].push_back(v);
      }
      for (auto& [key, members] : classes) {
        auto k = a_cell(a3, A, members.front());
        CHECK(k.members == members);
        CHECK(is_convex(a3, k.members).convex);
      }
    }
  }
}

TEST_CASE("convexity") {
  auto a2 = CoxeterSystem::from_type("A2");
  SECTION("singletons and the empty set are convex") {
    CHECK(is_convex(a2, {a2.gen(1)}).convex);
    CHECK(is_convex(a2, {}).convex);
  }
  SECTION("the pair {s1, s2} is not convex, witnessed by the identity") {
    auto r = is_convex(a2, {a2.gen(0), a2.gen(1)});
    CHECK_FALSE(r.convex);
    CHECK(r.witness == a2.id());
  }
  SECTION("exhaustive Tits equivalence on S3") {
    size_t n = a2.order();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<Elem> sub;
      for (size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) sub.push_back(static_cast<Elem>(i));
      // is_convex internally cross-checks the geodesic definition against
      // the descent-class characterization and throws on mismatch
      CHECK_NOTHROW(is_convex(a2, sub));
    }
  }
  SECTION("every W_A^D is convex (all A, D on S3)") {
    int nt = a2.num_reflections();
    for (unsigned am = 0; am < (1u << nt); ++am) {
      ReflSet A = a2.empty_refl_set();
      for (int t = 0; t < nt; ++t)
        if (am & (1u << t)) A.set(t);
      for (unsigned dm = 0; dm < (1u << nt); ++dm) {
        if ((dm & am) != dm) continue;
        ReflSet D = a2.empty_refl_set();
        for (int t = 0; t < nt; ++t)
          if (dm & (1u << t)) D.set(t);
        auto k = generalized_descent_class(a2, A, D);
        CHECK(is_convex(a2, k.members).convex);
      }
    }
  }
}

TEST_CASE("boundary data") {
  auto a2 = CoxeterSystem::from_type("A2");
  SECTION("identity singleton") {
    auto k = make_cell(a2, {a2.id()});
    CHECK(k.t_internal.none());
    CHECK(k.t_boundary == a2.simple_refl_set());
    for (int s = 0; s < 2; ++s) CHECK(k.out_dir[a2.refl_of_gen(s)] == 1);
  }
  SECTION("whole group has no boundary") {
    std::vector<Elem> all(a2.order());
    std::iota(all.begin(), all.end(), 0);
    auto k = make_cell(a2, all);
    CHECK(k.t_boundary.none());
    CHECK(k.t_internal == a2.full_refl_set());
  }
  SECTION("S3 descent class {s1, s1s2}") {
    auto k = make_cell(a2, {a2.gen(0), a2.element_of_word({0, 1})});
    CHECK(k.t_internal.count() == 1);
    CHECK(k.t_internal.test(a2.refl_of(a2.element_of_word({0, 1, 0}))));
    CHECK((k.t_internal & k.t_boundary).none());
  }
  SECTION("direction conflict on a non-convex set is an error") {
    // {e, w0} in S3: s1 exits upward at e and downward at w0
    CHECK_THROWS_AS(make_cell(a2, {a2.id(), a2.longest_element()}), error);
  }
}

TEST_CASE("reflection cut") {
  auto a2 = CoxeterSystem::from_type("A2");
  SECTION("S3: cutting s1 gives two components of size 3") {
    auto [c1, c2] = reflection_cut(a2, a2.refl_of_gen(0));
    CHECK(c1.size() == 3);
    CHECK(c2.size() == 3);
    CHECK(std::find(c1.begin(), c1.end(), a2.id()) != c1.end());
  }
  SECTION("every cut edge crosses between the components") {
    auto a3 = CoxeterSystem::from_type("A3");
    for (Refl t = 0; t < a3.num_reflections(); ++t) {
      auto [c1, c2] = reflection_cut(a3, t);
      CHECK(c1.size() + c2.size() == a3.order());
      std::vector<int> side(a3.order(), 0);
      for (Elem w : c2) side[w] = 1;
      for (Elem w = 0; w < static_cast<Elem>(a3.order()); ++w)
        for (int s = 0; s < a3.rank(); ++s)
          if (a3.refl_of(a3.conj(w, a3.gen(s))) == t)
            CHECK(side[w] != side[a3.right(w, s)]);
      // the identity has no descents, so it lies in the D = empty side
      CHECK(std::find(c1.begin(), c1.end(), a3.id()) != c1.end());
      ReflSet A = a3.empty_refl_set();
      A.set(t);
      for (Elem w : c1) CHECK(a3.descent_set(w, A).none());
      for (Elem w : c2) CHECK(a3.descent_set(w, A).count() == 1);
    }
  }
}

TEST_CASE("strong connectivity") {
  auto a2 = CoxeterSystem::from_type("A2");
  auto always = [](Elem, int, Elem) { return true; };
  SECTION("singleton") {
    CHECK(is_strongly_connected(a2, make_cell(a2, {a2.gen(0)}), always));
  }
  SECTION("a convex cell with all arcs feasible") {
    auto k = generalized_descent_class(a2, a2.empty_refl_set(), a2.empty_refl_set());
    CHECK(is_strongly_connected(a2, k, always));
  }
  SECTION("two-element cell with its arcs removed") {
    auto k = make_cell(a2, {a2.gen(0), a2.element_of_word({0, 1})});
    REQUIRE(k.size() == 2);
    auto never = [](Elem, int, Elem) { return false; };
    CHECK_FALSE(is_strongly_connected(a2, k, never));
  }
}

#include "ayc/ayrep.hpp"

TEST_CASE("identity cell of the S5 example admits a functional witness") {
  // For A = {(1,2),(2,3),(4,5),(1,4),(2,5)} the cell of 45123 has order 2
  // and cannot be a minimal AY cell; the cell of the identity is reported
  // to be one.  A small integer search should produce a generic witness.
  auto s5 = CoxeterSystem::from_type("A4");
  ReflSet A = s5.empty_refl_set();
  for (auto [i, j] : std::vector<std::pair<int, int>>{
           {1, 2}, {2, 3}, {4, 5}, {1, 4}, {2, 5}}) {
    std::vector<int> perm{1, 2, 3, 4, 5};
    std::swap(perm[i - 1], perm[j - 1]);
    A.set(s5.refl_of(s5.element_of_permutation(perm)));
  }
  auto k = a_cell(s5, A, s5.id());
  INFO("|K_A(id)| = " << k.size());
  auto witness = search_witness_functional(s5, k, 3);
  if (witness) {
    AYRep rep = build_ay_rep(s5, k, *witness);
    CHECK(verify_relations(rep).ok());
    CHECK(is_minimal(rep));
  }
  // the search is bounded; not finding a witness refutes nothing
  SUCCEED("witness search completed");
}
