#pragma once

/**
 * @file sequence.hpp
 * @brief Recurrence oracle for J(n+3) = J(n+2) + J(n+1) + 2 J(n) and the
 *        period-3 companion sequences used by the closed forms.
 *
 * term() and range() never touch a closed form: they are plain forward
 * iteration and serve as ground truth for everything else in the library.
 */

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "jacobsthal/errors.hpp"
#include "jacobsthal/rational.hpp"

namespace jacobsthal {

// Seeds J(0) = a, J(1) = b, J(2) = c.
struct SequenceParams {
  Rational a, b, c;
  Rational rho;      // a + b + c
  Rational quartic;  // 4a^2 + 3b^2 + c^2 - 2ac - 3bc

  SequenceParams() : SequenceParams(0, 1, 1) {}
  SequenceParams(Rational a_, Rational b_, Rational c_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    rho = a + b + c;
    quartic = Rational(4) * a * a + Rational(3) * b * b + c * c - Rational(2) * a * c -
              Rational(3) * b * c;
  }

  // Ordinary third-order Jacobsthal numbers: 0, 1, 1, 2, 5, 9, ...
  static SequenceParams jacobsthal() { return {0, 1, 1}; }
  // Third-order Jacobsthal-Lucas numbers: 2, 1, 5, 10, 17, 37, ...
  static SequenceParams jacobsthal_lucas() { return {2, 1, 5}; }

  std::array<std::string, 3> to_strings() const {
    return {a.to_string(), b.to_string(), c.to_string()};
  }

  friend bool operator==(const SequenceParams& x, const SequenceParams& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
  }
};

namespace detail {

inline BigInt lcm(const BigInt& x, const BigInt& y) { return x / boost::multiprecision::gcd(x, y) * y; }

// Runs the recurrence over integers scaled by the common denominator of the
// seeds and calls emit(n, value) for n in [from, to].
template <typename Emit>
void iterate_terms(const SequenceParams& p, std::int64_t from, std::int64_t to, Emit&& emit) {
  const BigInt scale = lcm(lcm(p.a.denominator(), p.b.denominator()), p.c.denominator());
  auto scaled = [&](const Rational& r) { return BigInt(r.numerator() * (scale / r.denominator())); };
  BigInt x0 = scaled(p.a), x1 = scaled(p.b), x2 = scaled(p.c);
  for (std::int64_t n = 0; n <= to; ++n) {
    if (n >= from) emit(n, Rational(x0, scale));
    BigInt next = x2 + x1 + 2 * x0;
    x0 = std::move(x1);
    x1 = std::move(x2);
    x2 = std::move(next);
  }
}

inline std::int64_t mod3(std::int64_t n) { return ((n % 3) + 3) % 3; }

}  // namespace detail

inline Rational term(const SequenceParams& params, std::int64_t n) {
  if (n < 0) throw DomainError("term: negative index " + std::to_string(n));
  Rational out;
  detail::iterate_terms(params, n, n, [&](std::int64_t, Rational v) { out = std::move(v); });
  return out;
}

// Terms from..to inclusive in one pass.
inline std::vector<Rational> range(const SequenceParams& params, std::int64_t from, std::int64_t to) {
  if (from < 0) throw DomainError("range: negative start index");
  if (from > to) {
    throw DomainError("range: empty range " + std::to_string(from) + ".." + std::to_string(to));
  }
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(to - from + 1));
  detail::iterate_terms(params, from, to, [&](std::int64_t, Rational v) { out.push_back(std::move(v)); });
  return out;
}

// Values of a period-3 sequence at n = 0, 1, 2 (mod 3).
struct PeriodicTriple {
  Rational at0, at1, at2;

  const Rational& at(std::int64_t n) const {
    switch (detail::mod3(n)) {
      case 0: return at0;
      case 1: return at1;
      default: return at2;
    }
  }

  // True when each entry is minus the sum of the other two, i.e. the sequence
  // satisfies X(n+2) = -X(n+1) - X(n).
  bool is_anti_recurrent() const { return (at0 + at1 + at2).is_zero(); }

  friend bool operator==(const PeriodicTriple&, const PeriodicTriple&) = default;

  friend std::ostream& operator<<(std::ostream& os, const PeriodicTriple& t) {
    return os << '(' << t.at0 << ", " << t.at1 << ", " << t.at2 << ')';
  }
};

inline const Rational& periodic_value(const PeriodicTriple& t, std::int64_t n) { return t.at(n); }

struct CompanionSet {
  PeriodicTriple V;     // 2, -3, 1
  PeriodicTriple Vgen;  // generalized V for seeds (a, b, c)
  PeriodicTriple W;     // Wgen at (0, 1, 1): 2, 1, -3
  PeriodicTriple Wgen;  // 7 Wgen(n+2) = 5 Vgen(n+1) - 3 Vgen(n)
  PeriodicTriple U;     // indexed by r: U(r) = 0, 1, -1 for r = 0, 1, 2 (mod 3)
  PeriodicTriple T;     // T(n) = Wgen(n+1) Wgen(n+2)
};

inline PeriodicTriple generalized_v(const SequenceParams& p) {
  const Rational &a = p.a, &b = p.b, &c = p.c;
  return {c + b - Rational(6) * a,
          Rational(2) * c - Rational(5) * b + Rational(2) * a,
          Rational(-3) * c + Rational(4) * b + Rational(4) * a};
}

inline PeriodicTriple generalized_w(const SequenceParams& p) {
  const Rational &a = p.a, &b = p.b, &c = p.c;
  return {Rational(-3) * c + Rational(5) * b + Rational(2) * a,
          Rational(2) * c - b - Rational(6) * a,
          c - Rational(4) * b + Rational(4) * a};
}

inline CompanionSet companions(const SequenceParams& params) {
  CompanionSet s;
  s.V = {2, -3, 1};
  s.Vgen = generalized_v(params);
  s.W = {2, 1, -3};
  s.Wgen = generalized_w(params);
  s.U = {0, 1, -1};
  s.T = {s.Wgen.at1 * s.Wgen.at2, s.Wgen.at2 * s.Wgen.at0, s.Wgen.at0 * s.Wgen.at1};
  return s;
}

}  // namespace jacobsthal
