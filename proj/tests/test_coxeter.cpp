#include <catch2/catch_amalgamated.hpp>

#include "ayc/coxeter.hpp"

#include <map>
#include <set>

using namespace ayc;

TEST_CASE("system construction and orders") {
  auto a2 = CoxeterSystem::from_type("A2");
  CHECK(a2.order() == 6);
  CHECK(a2.num_reflections() == 3);

  auto i5 = CoxeterSystem::from_type("I2(5)");
  CHECK(i5.order() == 10);
  CHECK(i5.num_reflections() == 5);

  CHECK(CoxeterSystem::from_type("B3").order() == 48);
  CHECK(CoxeterSystem::from_type("D4").order() == 192);
  CHECK(CoxeterSystem::from_type("G2").order() == 12);

  SECTION("invalid matrices are rejected") {
    CHECK_THROWS_AS(CoxeterSystem::from_matrix({{1, 1}, {1, 1}}), error);
    CHECK_THROWS_AS(CoxeterSystem::from_matrix({{1, 3}, {4, 1}}), error);
    CHECK_THROWS_AS(CoxeterSystem::from_matrix({{2, 3}, {3, 1}}), error);
    // rank-3 matrix with an entry outside {2,3,4,6}
    CHECK_THROWS_AS(
        CoxeterSystem::from_matrix({{1, 5, 2}, {5, 1, 3}, {2, 3, 1}}), error);
  }
  SECTION("rank-2 raw matrices take the dihedral model") {
    auto i7 = CoxeterSystem::from_matrix({{1, 7}, {7, 1}});
    CHECK(i7.order() == 14);
    CHECK(i7.kind() == SystemKind::Dihedral);
    CHECK_FALSE(i7.has_roots());
  }
  SECTION("enumeration guard") {
    CHECK_THROWS_AS(CoxeterSystem::from_type("A3", 10), error);
    CHECK_THROWS_AS(CoxeterSystem::from_type("E8"), error);  // default guard
    CHECK_THROWS_AS(
        CoxeterSystem::from_matrix({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}}, 100),
        error);  // affine, never closes
  }
}

TEST_CASE("words and lengths") {
  auto a3 = CoxeterSystem::from_type("A3");
  CHECK(a3.element_of_word({}) == a3.id());
  CHECK(a3.length(a3.id()) == 0);

  Elem w = a3.element_of_word({0, 1, 0, 2, 1, 0});
  CHECK(a3.length(w) == 6);
  CHECK(w == a3.longest_element());
  CHECK(a3.permutation_of(w) == std::vector<int>{4, 3, 2, 1});

  // idempotent under ss insertion
  CHECK(a3.element_of_word({0, 1, 1, 0, 2, 1, 0}) ==
        a3.element_of_word({2, 1, 0}));

  SECTION("dihedral braid words") {
    for (int m : {5, 7}) {
      auto sys = CoxeterSystem::from_type("I2(" + std::to_string(m) + ")");
      std::vector<int> u, v;
      for (int i = 0; i < m; ++i) {
        u.push_back(i % 2);
        v.push_back(1 - i % 2);
      }
      Elem a = sys.element_of_word(u), b = sys.element_of_word(v);
      CHECK(a == b);
      CHECK(sys.length(a) == m);
      CHECK(a == sys.longest_element());
    }
  }
  SECTION("unknown generator") {
    CHECK_THROWS_AS(a3.element_of_word({3}), error);
  }
}

TEST_CASE("length changes by exactly one under right multiplication") {
  for (const char* label : {"A3", "B3"}) {
    auto sys = CoxeterSystem::from_type(label);
    for (Elem w = 0; w < static_cast<Elem>(sys.order()); ++w)
      for (int s = 0; s < sys.rank(); ++s) {
        int d = sys.length(sys.right(w, s)) - sys.length(w);
        CHECK((d == 1 || d == -1));
      }
  }
}

TEST_CASE("descent sets") {
  auto a2 = CoxeterSystem::from_type("A2");
  CHECK(a2.descent_set(a2.id(), a2.full_refl_set()).none());

  // S3, w = s1 s2: Des_S(w) = {s1} by direct length comparison
  Elem w = a2.element_of_word({0, 1});
  auto d = a2.descent_set(w, a2.simple_refl_set());
  CHECK(d.count() == 1);
  CHECK(d.test(a2.refl_of_gen(0)));

  SECTION("|Des_T(w)| = l(w), exhaustively") {
    for (const char* label : {"A3", "B3", "I2(7)"}) {
      auto sys = CoxeterSystem::from_type(label);
      auto T = sys.full_refl_set();
      for (Elem v = 0; v < static_cast<Elem>(sys.order()); ++v)
        CHECK(sys.descent_set(v, T).count() == static_cast<size_t>(sys.length(v)));
    }
  }
  SECTION("Des_T(ws) = Des_T(w) + {wsw^-1} disjointly, when l goes up") {
    auto a3 = CoxeterSystem::from_type("A3");
    auto T = a3.full_refl_set();
    for (Elem v = 0; v < static_cast<Elem>(a3.order()); ++v)
      for (int s = 0; s < a3.rank(); ++s) {
        Elem vs = a3.right(v, s);
        if (a3.length(vs) < a3.length(v)) continue;
        auto dv = a3.descent_set(v, T);
        auto dvs = a3.descent_set(vs, T);
        Refl t = a3.conj_gen(v, s);
        CHECK_FALSE(dv.test(t));
        auto expect = dv;
        expect.set(t);
        CHECK(dvs == expect);
      }
  }
}

TEST_CASE("multiplication table agrees with word concatenation") {
  auto a3 = CoxeterSystem::from_type("A3");
  for (Elem a = 0; a < static_cast<Elem>(a3.order()); ++a)
    for (Elem b = 0; b < static_cast<Elem>(a3.order()); ++b) {
      auto wa = a3.word(a), wb = a3.word(b);
      wa.insert(wa.end(), wb.begin(), wb.end());
      CHECK(a3.mult(a, b) == a3.element_of_word(wa));
    }
  for (Elem a = 0; a < static_cast<Elem>(a3.order()); ++a) {
    CHECK(a3.mult(a, a3.inverse(a)) == a3.id());
    for (int s = 0; s < a3.rank(); ++s)
      CHECK(a3.left(s, a) == a3.mult(a3.gen(s), a));
  }
}

TEST_CASE("roots") {
  for (const char* label : {"A3", "B3", "D4"}) {
    auto sys = CoxeterSystem::from_type(label);
    REQUIRE(sys.has_roots());
    std::set<std::vector<long long>> distinct;
    for (Refl t = 0; t < sys.num_reflections(); ++t) {
      const auto& r = sys.root(t);
      distinct.insert(r);
      CHECK(sys.refl_of_root(r) == t);  // bijection round trip
      CHECK(sys.root_height(t) >= 1);
      // a reflection negates its own root
      auto m = sys.matrix_of(sys.refl_elem(t));
      int n = sys.rank();
      for (int i = 0; i < n; ++i) {
        long long acc = 0;
        for (int j = 0; j < n; ++j) acc += m[i * n + j] * r[j];
        CHECK(acc == -r[i]);
      }
    }
    CHECK(distinct.size() == static_cast<size_t>(sys.num_reflections()));
    for (int s = 0; s < sys.rank(); ++s)
      CHECK(sys.root_height(sys.refl_of_gen(s)) == 1);
  }
  CHECK(CoxeterSystem::from_type("A3").num_reflections() == 6);
  CHECK(CoxeterSystem::from_type("B3").num_reflections() == 9);
  CHECK(CoxeterSystem::from_type("D4").num_reflections() == 12);
}

TEST_CASE("longest element") {
  for (const char* label : {"A3", "B3", "I2(5)"}) {
    auto sys = CoxeterSystem::from_type(label);
    Elem w0 = sys.longest_element();
    CHECK(sys.length(w0) == sys.num_reflections());
    int at_max = 0;
    for (Elem w = 0; w < static_cast<Elem>(sys.order()); ++w)
      if (sys.length(w) == sys.length(w0)) ++at_max;
    CHECK(at_max == 1);
    CHECK(sys.mult(w0, w0) == sys.id());
  }
}

TEST_CASE("conjugacy classes") {
  auto a3 = CoxeterSystem::from_type("A3");
  REQUIRE(a3.num_classes() == 5);
  std::vector<std::vector<int>> expect_types = {
      {1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};
  std::vector<size_t> expect_sizes = {1, 6, 3, 8, 6};
  for (int c = 0; c < 5; ++c) {
    CHECK(a3.class_cycle_type(c) == expect_types[c]);
    CHECK(a3.class_members(c).size() == expect_sizes[c]);
  }
  for (Elem w = 0; w < static_cast<Elem>(a3.order()); ++w)
    CHECK(a3.element_of_permutation(a3.permutation_of(w)) == w);
}

TEST_CASE("simple conjugacy via odd diagram paths") {
  auto a3 = CoxeterSystem::from_type("A3");
  for (int s = 0; s < 3; ++s)
    for (int t = 0; t < 3; ++t) CHECK(simple_conjugacy(a3, s, t));

  auto b3 = CoxeterSystem::from_type("B3");  // m(s1,s2) = 4
  CHECK(simple_conjugacy(b3, 0, 0));
  CHECK_FALSE(simple_conjugacy(b3, 0, 1));
  CHECK_FALSE(simple_conjugacy(b3, 0, 2));
  CHECK(simple_conjugacy(b3, 1, 2));

  SECTION("agrees with brute-force conjugacy") {
    for (const char* label : {"A3", "B3", "D4"}) {
      auto sys = CoxeterSystem::from_type(label);
      for (int s = 0; s < sys.rank(); ++s)
        for (int t = 0; t < sys.rank(); ++t) {
          bool brute = sys.class_of(sys.gen(s)) == sys.class_of(sys.gen(t));
          CHECK(simple_conjugacy(sys, s, t) == brute);
        }
    }
  }
}

TEST_CASE("minimal coset representatives") {
  auto a2 = CoxeterSystem::from_type("A2");
  SECTION("trivial parabolic") {
    auto d = minimal_coset_reps(a2, {});
    CHECK(d.min_reps.size() == a2.order());
  }
  SECTION("full parabolic") {
    auto d = minimal_coset_reps(a2, {0, 1});
    CHECK(d.min_reps == std::vector<Elem>{a2.id()});
  }
  SECTION("S3, J = {s1}") {
    auto d = minimal_coset_reps(a2, {0});
    std::vector<Elem> expect = {a2.id(), a2.gen(1), a2.element_of_word({1, 0})};
    std::sort(expect.begin(), expect.end());
    CHECK(d.min_reps == expect);
    CHECK(d.parabolic_members.size() * d.min_reps.size() == a2.order());
  }
  SECTION("factorization and downward closure") {
    auto a3 = CoxeterSystem::from_type("A3");
    auto d = minimal_coset_reps(a3, {0, 2});
    auto T = a3.full_refl_set();
    for (Elem w = 0; w < static_cast<Elem>(a3.order()); ++w) {
      CHECK(a3.mult(d.p_part[w], d.r_part[w]) == w);
      CHECK(a3.length(w) == a3.length(d.p_part[w]) + a3.length(d.r_part[w]));
    }
    for (Elem r : d.min_reps) {
      // r in W^J iff Des_T(r) contains no reflection from J
      auto des = a3.descent_set(r, T);
      CHECK_FALSE(des.test(a3.refl_of_gen(0)));
      CHECK_FALSE(des.test(a3.refl_of_gen(2)));
      // downward closure: prefixes of a reduced word stay in W^J
      auto wd = a3.word(r);
      Elem x = a3.id();
      for (int s : wd) {
        x = a3.right(x, s);
        CHECK(d.r_part[x] == x);
      }
    }
  }
}

TEST_CASE("coset shortest element") {
  auto a2 = CoxeterSystem::from_type("A2");
  CHECK(coset_shortest(a2, a2.id(), 0, 1) == a2.id());
  CHECK(coset_shortest(a2, a2.longest_element(), 0, 1) == a2.id());

  auto a3 = CoxeterSystem::from_type("A3");
  Elem w = a3.element_of_word({0, 2});
  CHECK(coset_shortest(a3, w, 1, 2) == a3.gen(0));
}

#include "ayc/conjugation.hpp"

TEST_CASE("conjugation paths") {
  auto a2 = CoxeterSystem::from_type("A2");
  SECTION("equal pairs give the one-step path") {
    Elem w = a2.element_of_word({0, 1});
    auto p = conjugation_path(a2, w, 0, w, 0);
    CHECK(p.epsilon == 0);
    CHECK(p.pairs.size() == 1);
    CHECK(p.braid_moves.empty());
    CHECK(validate_conjugation_path(a2, p).empty());
  }
  SECTION("(e,s1) to (s1,s1) flips epsilon") {
    auto p = conjugation_path(a2, a2.id(), 0, a2.gen(0), 0);
    CHECK(p.epsilon == 1);
    CHECK(p.pairs.size() == 1);
    CHECK(validate_conjugation_path(a2, p).empty());
  }
  SECTION("pairs with different reflections are rejected") {
    CHECK_THROWS_AS(conjugation_path(a2, a2.id(), 0, a2.id(), 1), error);
  }
  SECTION("all same-reflection pairs of S3 and I2(4) validate") {
    for (const char* label : {"A2", "I2(4)"}) {
      auto sys = CoxeterSystem::from_type(label);
      for (Elem w = 0; w < static_cast<Elem>(sys.order()); ++w)
        for (int s = 0; s < sys.rank(); ++s)
          for (Elem v = 0; v < static_cast<Elem>(sys.order()); ++v)
            for (int t = 0; t < sys.rank(); ++t) {
              if (sys.conj(w, sys.gen(s)) != sys.conj(v, sys.gen(t))) continue;
              auto p = conjugation_path(sys, w, s, v, t);
              auto msg = validate_conjugation_path(sys, p);
              INFO("pair ((" << w << "," << s << "),(" << v << "," << t << ")): " << msg);
              CHECK(msg.empty());
            }
    }
  }
}

TEST_CASE("rank-1 system") {
  auto a1 = CoxeterSystem::from_type("A1");
  CHECK(a1.order() == 2);
  CHECK(a1.num_reflections() == 1);
  CHECK(a1.is_simply_laced());
  CHECK(a1.is_irreducible());
  CHECK(a1.longest_element() == a1.gen(0));
  CHECK(a1.root_height(0) == 1);
}

TEST_CASE("exceptional types construct with classical invariants") {
  struct Expect { const char* label; size_t order; int refl; int classes; };
  for (auto e : {Expect{"G2", 12, 6, 6}, Expect{"F4", 1152, 24, 25},
                 Expect{"E6", 51840, 36, 25}}) {
    auto sys = CoxeterSystem::from_type(e.label);
    CHECK(sys.order() == e.order);
    CHECK(sys.num_reflections() == e.refl);
    CHECK(sys.num_classes() == e.classes);
    CHECK(sys.length(sys.longest_element()) == sys.num_reflections());
  }
}

TEST_CASE("conjugation paths across mixed edge labels (B3, I2(2))") {
  for (const char* label : {"B3", "I2(2)"}) {
    auto sys = CoxeterSystem::from_type(label);
    std::map<Elem, std::vector<std::pair<Elem, int>>> by_refl;
    for (Elem w = 0; w < static_cast<Elem>(sys.order()); ++w)
      for (int s = 0; s < sys.rank(); ++s)
        by_refl[sys.conj(w, sys.gen(s))].emplace_back(w, s);
    for (auto& [t, pairs] : by_refl)
      for (auto [w, s] : pairs)
        for (auto [v, u] : pairs) {
          auto p = conjugation_path(sys, w, s, v, u);
          auto msg = validate_conjugation_path(sys, p);
          INFO(label << " pair ((" << w << "," << s << "),(" << v << "," << u
               << ")): " << msg);
          REQUIRE(msg.empty());
        }
  }
}
