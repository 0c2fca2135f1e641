#pragma once

/**
 * @file eisenstein.hpp
 * @brief Exact arithmetic in Q(w), w a primitive cube root of unity.
 *
 * Elements are x + y*w over the basis {1, w} with w^2 = -1 - w. The two
 * complex cube roots of unity are w1 = w and w2 = conj(w) = -1 - w, so every
 * Binet coefficient of a rational third-order Jacobsthal sequence lives here.
 */

#include <cstdint>
#include <ostream>
#include <string>

#include "jacobsthal/errors.hpp"
#include "jacobsthal/rational.hpp"

namespace jacobsthal {

struct EisensteinRational {
  Rational re;  // coefficient of 1
  Rational om;  // coefficient of w

  EisensteinRational() = default;
  EisensteinRational(Rational x) : re(std::move(x)) {}  // NOLINT
  template <std::integral T>
  EisensteinRational(T x) : re(x) {}  // NOLINT
  EisensteinRational(Rational x, Rational y) : re(std::move(x)), om(std::move(y)) {}

  static EisensteinRational omega1() { return {Rational(0), Rational(1)}; }
  static EisensteinRational omega2() { return {Rational(-1), Rational(-1)}; }

  bool is_rational() const { return om.is_zero(); }

  // Swaps w1 <-> w2: x + y*w  ->  (x - y) - y*w.
  EisensteinRational conj() const { return {re - om, -om}; }

  // u * conj(u) = x^2 - xy + y^2, always >= 0 and zero only for u = 0.
  Rational norm() const { return re * re - re * om + om * om; }

  EisensteinRational inverse() const {
    const Rational n = norm();
    if (n.is_zero()) throw DomainError("inverse of zero in Q(w)");
    const EisensteinRational c = conj();
    return {c.re / n, c.om / n};
  }

  EisensteinRational operator-() const { return {-re, -om}; }

  EisensteinRational& operator+=(const EisensteinRational& o) {
    re += o.re;
    om += o.om;
    return *this;
  }
  EisensteinRational& operator-=(const EisensteinRational& o) {
    re -= o.re;
    om -= o.om;
    return *this;
  }
  // (x + yw)(s + tw) = (xs - yt) + (xt + ys - yt)w
  EisensteinRational& operator*=(const EisensteinRational& o) {
    const Rational yt = om * o.om;
    Rational r = re * o.re - yt;
    Rational w = re * o.om + om * o.re - yt;
    re = std::move(r);
    om = std::move(w);
    return *this;
  }
  EisensteinRational& operator/=(const EisensteinRational& o) { return *this *= o.inverse(); }

  friend EisensteinRational operator+(EisensteinRational a, const EisensteinRational& b) { return a += b; }
  friend EisensteinRational operator-(EisensteinRational a, const EisensteinRational& b) { return a -= b; }
  friend EisensteinRational operator*(EisensteinRational a, const EisensteinRational& b) { return a *= b; }
  friend EisensteinRational operator/(EisensteinRational a, const EisensteinRational& b) { return a /= b; }

  friend bool operator==(const EisensteinRational&, const EisensteinRational&) = default;

  std::string to_string() const { return re.to_string() + " + (" + om.to_string() + ")w"; }

  friend std::ostream& operator<<(std::ostream& os, const EisensteinRational& u) {
    return os << u.to_string();
  }
};

inline EisensteinRational eis_mul(const EisensteinRational& u, const EisensteinRational& v) {
  return u * v;
}

// Square-and-multiply; u^0 = 1.
inline EisensteinRational eis_pow(EisensteinRational base, std::uint64_t k) {
  EisensteinRational result(1);
  while (k != 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k != 0) base *= base;
  }
  return result;
}

inline Rational eis_rational_part(const EisensteinRational& u) {
  if (!u.is_rational()) {
    throw NonRealResidueError("non-real Binet residue: " + u.to_string());
  }
  return u.re;
}

}  // namespace jacobsthal
