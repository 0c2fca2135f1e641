#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision rationals over boost::multiprecision::cpp_int.
 *
 * Values are always stored in lowest terms with a positive denominator, so
 * structural equality is value equality and zero is uniquely 0/1.
 */

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "jacobsthal/errors.hpp"

namespace jacobsthal {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
 public:
  Rational() : num_(0), den_(1) {}

  template <std::integral T>
  Rational(T n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)

  Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT

  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    normalize();
  }

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  // Parses "p", "-p", "p/q"; no whitespace, no decimals.
  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_integer_literal(num_text)) {
      throw DomainError("malformed rational literal: '" + std::string(text) + "'");
    }
    BigInt n = parse_integer(num_text);
    if (slash == std::string_view::npos) return Rational(std::move(n));
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text)) {
      throw DomainError("malformed rational literal: '" + std::string(text) + "'");
    }
    return Rational(std::move(n), parse_integer(den_text));
  }

  // "p/q", with "/1" suppressed.
  std::string to_string() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  // 2^k for any integer k; negative k gives 1/2^|k|.
  static Rational pow2(std::int64_t k) {
    BigInt p = 1;
    p <<= static_cast<unsigned>(k < 0 ? -k : k);
    if (k >= 0) return Rational(std::move(p));
    Rational r;
    r.num_ = 1;
    r.den_ = std::move(p);
    return r;
  }

  Rational pow(std::int64_t k) const {
    if (k < 0) return Rational(1) / pow(-k);
    Rational r;
    r.num_ = boost::multiprecision::pow(num_, static_cast<unsigned>(k));
    r.den_ = boost::multiprecision::pow(den_, static_cast<unsigned>(k));
    return r;
  }

  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    if (den_ == 1 && o.den_ == 1) {
      num_ += o.num_;
      return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }

  Rational& operator-=(const Rational& o) { return *this += -o; }

  Rational& operator*=(const Rational& o) {
    if (den_ == 1 && o.den_ == 1) {
      num_ *= o.num_;
      return *this;
    }
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }

  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    BigInt n = num_ * o.den_;
    BigInt d = den_ * o.num_;
    num_ = std::move(n);
    den_ = std::move(d);
    normalize();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw DomainError("rational with zero denominator");
    if (den_.sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    const BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  static bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s) {
      if (ch < '0' || ch > '9') return false;
    }
    return true;
  }

  // cpp_int reads a leading 0 as an octal prefix, so strip it first.
  static BigInt parse_integer(std::string_view s) {
    const bool negative = s.front() == '-';
    if (s.front() == '-' || s.front() == '+') s.remove_prefix(1);
    while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
    BigInt v{std::string(s)};
    return negative ? BigInt(-v) : v;
  }

  BigInt num_;
  BigInt den_;  // > 0
};

// p/q in lowest terms with positive denominator.
inline Rational rat_normalize(BigInt p, BigInt q) {
  if (q.is_zero()) throw DomainError("rat_normalize: zero denominator");
  return Rational(std::move(p), std::move(q));
}

}  // namespace jacobsthal
