// Exact scalar arithmetic: rationals and rational functions in the Hecke
// parameter q, represented as quotients of integer-coefficient polynomials
// in canonical form.  Every operation is exact; no floating point here.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ayc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Library-wide error for violated preconditions and malformed input.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

namespace poly {

// Dense coefficient vector, ascending powers, no trailing zeros.
using P = std::vector<Int>;

inline void trim(P& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline P from_int(const Int& c) {
  P p;
  if (c != 0) p.push_back(c);
  return p;
}

inline bool is_zero(const P& p) { return p.empty(); }
inline int degree(const P& p) { return static_cast<int>(p.size()) - 1; }

inline P add(const P& a, const P& b) {
  P r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

inline P neg(P a) {
  for (auto& c : a) c = -c;
  return a;
}

inline P sub(const P& a, const P& b) { return add(a, neg(b)); }

inline P mul(const P& a, const P& b) {
  if (a.empty() || b.empty()) return {};
  P r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline P mul_const(P a, const Int& c) {
  if (c == 0) return {};
  for (auto& x : a) x *= c;
  return a;
}

inline Int content(const P& p) {
  Int g = 0;
  for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
  return g;  // 0 for the zero polynomial
}

inline P div_const(P a, const Int& c) {
  for (auto& x : a) x /= c;
  return a;
}

// Primitive part with positive leading coefficient.
inline P primitive(const P& p) {
  if (p.empty()) return p;
  Int c = content(p);
  if (p.back() < 0) c = -c;
  return div_const(p, c);
}

// Exact division, throws if the remainder is nonzero.
inline P div_exact(const P& a, const P& b) {
  if (b.empty()) throw error("polynomial division by zero");
  P rem = a;
  P quot(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Int(0));
  while (!rem.empty() && rem.size() >= b.size()) {
    if (rem.back() % b.back() != 0) throw error("inexact polynomial division");
    Int c = rem.back() / b.back();
    size_t shift = rem.size() - b.size();
    quot[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
    trim(rem);
  }
  if (!rem.empty()) throw error("inexact polynomial division");
  trim(quot);
  return quot;
}

// GCD over Z[q] via the primitive Euclidean algorithm (pseudo-remainders).
// Result is primitive with positive leading coefficient; the content gcd
// is handled by the caller.
inline P gcd_primitive(P a, P b) {
  a = primitive(a);
  b = primitive(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  while (!b.empty()) {
    // pseudo-remainder of a by b
    P rem = a;
    while (!rem.empty() && rem.size() >= b.size()) {
      Int lc = rem.back();
      size_t shift = rem.size() - b.size();
      rem = mul_const(rem, b.back());
      for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= lc * b[i];
      trim(rem);
    }
    a = b;
    b = primitive(rem);
  }
  return a;
}

inline Rat evaluate(const P& p, const Rat& x) {
  Rat acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + Rat(p[i]);
  return acc;
}

inline std::string term_string(const Int& coeff, size_t power) {
  Int mag = boost::multiprecision::abs(coeff);
  std::string body;
  if (power == 0) {
    body = mag.str();
  } else {
    if (mag != 1) body = mag.str();
    body += "q";
    if (power > 1) body += "^" + std::to_string(power);
  }
  return body;
}

inline std::string to_string(const P& p) {
  if (p.empty()) return "0";
  std::string out;
  bool first = true;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    if (first) {
      if (p[i] < 0) out += "-";
      first = false;
    } else {
      out += (p[i] < 0) ? " - " : " + ";
    }
    out += term_string(p[i], i);
  }
  return out;
}

inline size_t term_count(const P& p) {
  size_t n = 0;
  for (const auto& c : p)
    if (c != 0) ++n;
  return n;
}

}  // namespace poly

/// An element of the fraction field of Z[q]: num/den with num,den coprime
/// in Z[q] (no common polynomial factor, coprime contents) and den having
/// positive leading coefficient.  Plain rationals are the degree-zero case.
class Scalar {
public:
  Scalar() : num_(), den_(poly::from_int(1)) {}
  Scalar(int v) : Scalar(Int(v)) {}
  Scalar(const Int& v) : num_(poly::from_int(v)), den_(poly::from_int(1)) {}
  Scalar(const Rat& v)
      : num_(poly::from_int(boost::multiprecision::numerator(v))),
        den_(poly::from_int(boost::multiprecision::denominator(v))) {}

  static Scalar from_fraction(poly::P num, poly::P den) {
    Scalar s;
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    s.canonicalize();
    return s;
  }

  /// The indeterminate q.
  static Scalar q() { return from_fraction({Int(0), Int(1)}, poly::from_int(1)); }

  /// q^k for any integer k (negative powers land in the denominator).
  static Scalar q_power(long long k) {
    poly::P mono(static_cast<size_t>(k >= 0 ? k : -k) + 1, Int(0));
    mono.back() = 1;
    if (k >= 0) return from_fraction(mono, poly::from_int(1));
    return from_fraction(poly::from_int(1), mono);
  }

  const poly::P& num() const { return num_; }
  const poly::P& den() const { return den_; }

  bool is_zero() const { return num_.empty(); }
  bool is_rational() const { return poly::degree(num_) <= 0 && poly::degree(den_) <= 0; }

  /// Value as an exact rational; requires is_rational().
  Rat as_rational() const {
    if (!is_rational()) throw error("scalar is not a constant: " + to_string());
    if (num_.empty()) return Rat(0);
    return Rat(num_[0], den_[0]);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return from_fraction(
        poly::add(poly::mul(a.num_, b.den_), poly::mul(b.num_, a.den_)),
        poly::mul(a.den_, b.den_));
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return from_fraction(
        poly::sub(poly::mul(a.num_, b.den_), poly::mul(b.num_, a.den_)),
        poly::mul(a.den_, b.den_));
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return from_fraction(poly::mul(a.num_, b.num_), poly::mul(a.den_, b.den_));
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw error("scalar division by zero");
    return from_fraction(poly::mul(a.num_, b.den_), poly::mul(a.den_, b.num_));
  }
  Scalar operator-() const {
    Scalar r = *this;
    r.num_ = poly::neg(r.num_);
    return r;
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Exact evaluation at q = value; throws on a pole.
  Rat specialize(const Rat& value) const {
    Rat d = poly::evaluate(den_, value);
    if (d == 0) throw error("pole at q = " + to_string_rat(value) + " in " + to_string());
    return poly::evaluate(num_, value) / d;
  }

  /// If this scalar is exactly q^k for some integer k, return k.
  /// Used when recovering functionals from Hecke-mode coefficients.
  bool as_q_power(long long& k) const {
    if (poly::term_count(num_) == 1 && num_.back() == 1 &&
        poly::term_count(den_) == 1 && den_.back() == 1) {
      if (poly::degree(den_) == 0) {
        k = poly::degree(num_);
        return true;
      }
      if (poly::degree(num_) == 0) {
        k = -poly::degree(den_);
        return true;
      }
    }
    return false;
  }

  /// Canonical rendering: ascending powers, denominator omitted when 1,
  /// multi-term polynomials parenthesized.  Examples: "-1/2", "1 + q",
  /// "(1 - q^3)/(1 - q)".
  std::string to_string() const {
    if (poly::degree(den_) == 0 && !den_.empty() && den_[0] == 1)
      return poly::to_string(num_);
    auto wrap = [](const poly::P& p) {
      std::string s = poly::to_string(p);
      return poly::term_count(p) > 1 ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
  }

  static std::string to_string_rat(const Rat& r) {
    return Scalar(r).to_string();
  }

private:
  void canonicalize() {
    poly::trim(num_);
    poly::trim(den_);
    if (den_.empty()) throw error("scalar with zero denominator");
    if (num_.empty()) {
      den_ = poly::from_int(1);
      return;
    }
    poly::P g = poly::gcd_primitive(num_, den_);
    if (poly::degree(g) > 0) {
      num_ = poly::div_exact(num_, g);
      den_ = poly::div_exact(den_, g);
    }
    Int c = boost::multiprecision::gcd(poly::content(num_), poly::content(den_));
    if (den_.back() < 0) c = -c;
    num_ = poly::div_const(num_, c);
    den_ = poly::div_const(den_, c);
  }

  poly::P num_, den_;
};

/// The q-integer [k]_q = (1 - q^k)/(1 - q), a Laurent polynomial for any
/// integer k; [0]_q = 0, [1]_q = 1, [-1]_q = -1/q.
inline Scalar q_integer(long long k) {
  if (k == 0) return Scalar(0);
  if (k > 0) {
    poly::P p(static_cast<size_t>(k), Int(1));  // 1 + q + ... + q^{k-1}
    return Scalar::from_fraction(std::move(p), poly::from_int(1));
  }
  // [k]_q = -q^k [-k]_q for k < 0
  return -Scalar::q_power(k) * q_integer(-k);
}

/// The transform d = 1 - (1-q)/a of Hecke coefficients; converts the
/// additive q=1 coset condition into a multiplicative one.
inline Scalar d_coefficient(const Scalar& a, const Scalar& q_param) {
  if (a.is_zero()) throw error("d_coefficient of a = 0");
  return Scalar(1) - (Scalar(1) - q_param) / a;
}

/// Inverse transform: a = (1-q)/(1-d), defined for d != 1.
inline Scalar a_from_d(const Scalar& d, const Scalar& q_param) {
  Scalar one(1);
  if (d == one) throw error("a_from_d of d = 1");
  return (one - q_param) / (one - d);
}

// --- parsing (inverse of to_string, used by the CLI table reader) ---

namespace detail {

inline poly::P parse_poly(const std::string& s, size_t& i) {
  auto skip = [&] { while (i < s.size() && s[i] == ' ') ++i; };
  poly::P acc;
  skip();
  bool first = true;
  while (i < s.size()) {
    skip();
    int sign = 1;
    if (!first || (i < s.size() && (s[i] == '+' || s[i] == '-'))) {
      if (i >= s.size() || (s[i] != '+' && s[i] != '-')) break;
      sign = (s[i] == '-') ? -1 : 1;
      ++i;
      skip();
    }
    first = false;
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
    Int coeff = digits.empty() ? Int(1) : Int(digits);
    size_t power = 0;
    if (i < s.size() && s[i] == 'q') {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string ed;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ed += s[i++];
        if (ed.empty()) throw error("bad exponent in scalar string");
        power = std::stoull(ed);
      }
    } else if (digits.empty()) {
      throw error("bad term in scalar string");
    }
    if (acc.size() < power + 1) acc.resize(power + 1, Int(0));
    acc[power] += sign * coeff;
    skip();
  }
  poly::trim(acc);
  return acc;
}

inline poly::P parse_poly_group(const std::string& s, size_t& i) {
  while (i < s.size() && s[i] == ' ') ++i;
  if (i < s.size() && s[i] == '(') {
    ++i;
    poly::P p = parse_poly(s, i);
    if (i >= s.size() || s[i] != ')') throw error("unbalanced parens in scalar string");
    ++i;
    return p;
  }
  return parse_poly(s, i);
}

}  // namespace detail

/// Parse the canonical rendering back into a Scalar.
inline Scalar parse_scalar(const std::string& s) {
  size_t i = 0;
  poly::P num = detail::parse_poly_group(s, i);
  poly::P den = poly::from_int(1);
  while (i < s.size() && s[i] == ' ') ++i;
  if (i < s.size() && s[i] == '/') {
    ++i;
    den = detail::parse_poly_group(s, i);
  }
  while (i < s.size() && s[i] == ' ') ++i;
  if (i != s.size()) throw error("trailing junk in scalar string: " + s);
  return Scalar::from_fraction(std::move(num), std::move(den));
}

}  // namespace ayc
