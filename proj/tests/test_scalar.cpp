#include <catch2/catch_amalgamated.hpp>

#include "ayc/scalar.hpp"

#include <random>

using namespace ayc;

namespace {

std::mt19937_64 rng(20240517);

poly::P random_poly(int max_deg, bool nonzero) {
  std::uniform_int_distribution<int> deg(0, max_deg), coeff(-4, 4);
  for (;;) {
    poly::P p(static_cast<size_t>(deg(rng)) + 1);
    for (auto& c : p) c = coeff(rng);
    poly::trim(p);
    if (!nonzero || !p.empty()) return p;
  }
}

Scalar random_scalar(bool nonzero = false) {
  for (;;) {
    Scalar s = Scalar::from_fraction(random_poly(3, false), random_poly(2, true));
    if (!nonzero || !s.is_zero()) return s;
  }
}

}  // namespace

TEST_CASE("q-integers match the defining formula") {
  CHECK(q_integer(0) == Scalar(0));
  CHECK(q_integer(1) == Scalar(1));
  CHECK(q_integer(2) == Scalar(1) + Scalar::q());
  // [-1]_q = -q^{-1}
  CHECK(q_integer(-1) == -(Scalar(1) / Scalar::q()));
  CHECK(q_integer(-1).to_string() == "-1/q");
  CHECK(q_integer(3).to_string() == "1 + q + q^2");
}

TEST_CASE("q-integer addition law [j]q^k + [k] = [j+k]") {
  for (long long j = -5; j <= 5; ++j)
    for (long long k = -5; k <= 5; ++k) {
      Scalar lhs = q_integer(j) * Scalar::q_power(k) + q_integer(k);
      CHECK(lhs == q_integer(j + k));
    }
}

TEST_CASE("d-coefficient transform") {
  Scalar q = Scalar::q();
  SECTION("a = 1/[k]_q gives d = q^k") {
    for (long long k : {-3LL, -1LL, 2LL, 5LL}) {
      Scalar a = Scalar(1) / q_integer(k);
      CHECK(d_coefficient(a, q) == Scalar::q_power(k));
    }
  }
  SECTION("q specialized to 1 gives d = 1") {
    CHECK(d_coefficient(Scalar(Rat(7, 3)), Scalar(1)) == Scalar(1));
  }
  SECTION("a = 0 is an error") {
    CHECK_THROWS_AS(d_coefficient(Scalar(0), q), error);
  }
  SECTION("bijection with stated inverse on random rational functions") {
    int done = 0;
    while (done < 50) {
      Scalar a = random_scalar(true);
      Scalar d = d_coefficient(a, q);
      if (d == Scalar(1)) continue;  // only hit when a is degenerate
      CHECK(a_from_d(d, q) == a);
      ++done;
    }
  }
}

TEST_CASE("specialization") {
  CHECK(q_integer(3).specialize(1) == 3);
  CHECK((Scalar(1) + Scalar::q()).specialize(2) == 3);
  Scalar pole = Scalar(1) / (Scalar(1) - Scalar::q());
  CHECK_THROWS_AS(pole.specialize(1), error);
  // (1-q^k)/(1-q) reduces to a polynomial, so q=1 is not a pole
  CHECK(q_integer(5).specialize(1) == 5);
}

TEST_CASE("canonical form is representation independent") {
  for (int i = 0; i < 60; ++i) {
    Scalar x = random_scalar(), y = random_scalar(), z = random_scalar();
    CHECK((x + y) * z == x * z + y * z);
    CHECK(x * y == y * x);
    CHECK(x - x == Scalar(0));
    Scalar w = random_scalar(true);
    CHECK(x / w * w == x);
  }
  // same value through different fraction representations
  Scalar a = Scalar::from_fraction({Int(2), Int(2)}, {Int(4)});
  Scalar b = Scalar::from_fraction({Int(1), Int(1)}, {Int(2)});
  CHECK(a == b);
  CHECK(a.to_string() == "(1 + q)/2");
}

TEST_CASE("rendering and parsing round trip") {
  std::vector<Scalar> samples = {
      Scalar(0),
      Scalar(Rat(-1, 2)),
      Scalar(7),
      q_integer(-2),
      Scalar(1) / (Scalar::q() - Scalar(1)),
      (Scalar(1) - Scalar::q() * Scalar::q()) / (Scalar(1) - Scalar::q()),
  };
  for (int i = 0; i < 40; ++i) samples.push_back(random_scalar());
  for (const auto& s : samples) {
    CHECK(parse_scalar(s.to_string()) == s);
  }
  CHECK(Scalar(Rat(-1, 2)).to_string() == "-1/2");
  CHECK(q_integer(-2).to_string() == "(-1 - q)/q^2");
}

TEST_CASE("q-power extraction") {
  long long k = 0;
  CHECK(Scalar::q_power(4).as_q_power(k));
  CHECK(k == 4);
  CHECK(Scalar::q_power(-3).as_q_power(k));
  CHECK(k == -3);
  CHECK(Scalar(1).as_q_power(k));
  CHECK(k == 0);
  CHECK_FALSE((Scalar(1) + Scalar::q()).as_q_power(k));
  CHECK_FALSE(Scalar(2).as_q_power(k));
}
