#pragma once

// Truncated formal power series over Q.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "jacobsthal/errors.hpp"
#include "jacobsthal/rational.hpp"
#include "jacobsthal/sequence.hpp"

namespace jacobsthal {

class Poly {
 public:
  static constexpr std::int64_t kZeroDegree = std::numeric_limits<std::int64_t>::min();

  Poly() = default;
  Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {}  // NOLINT
  Poly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {}

  // Coefficient of t^k; zero past the stored length.
  Rational operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(); }

  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  std::int64_t degree() const {
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      if (!coeffs_[k].is_zero()) return static_cast<std::int64_t>(k);
    }
    return kZeroDegree;
  }

  Poly trimmed() const {
    const std::int64_t d = degree();
    if (d == kZeroDegree) return Poly();
    return Poly(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + d + 1));
  }

  friend bool operator==(const Poly& x, const Poly& y) {
    return x.trimmed().coeffs_ == y.trimmed().coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
};

// First `count` coefficients of num/den: c_n = (num_n - sum_{k=1..n} den_k c_{n-k}) / den_0.
inline std::vector<Rational> series_div(const Poly& num, const Poly& den, std::size_t count) {
  if (count == 0) throw DomainError("series_div: count must be positive");
  if (den[0].is_zero()) throw NotUnitError("series_div: denominator is not a unit in the power-series ring");
  const Rational lead = den[0];
  const std::size_t den_len = den.size();
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    Rational acc = num[n];
    for (std::size_t k = 1; k <= n && k < den_len; ++k) {
      if (!den.coefficients()[k].is_zero()) acc -= den.coefficients()[k] * out[n - k];
    }
    out.push_back(lead == Rational(1) ? std::move(acc) : acc / lead);
  }
  return out;
}

// Product truncated to the first `count` coefficients.
inline std::vector<Rational> series_mul(const Poly& x, const Poly& y, std::size_t count) {
  std::vector<Rational> out(count);
  for (std::size_t i = 0; i < x.size() && i < count; ++i) {
    if (x.coefficients()[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size() && i + j < count; ++j) {
      out[i + j] += x.coefficients()[i] * y.coefficients()[j];
    }
  }
  return out;
}

// Numerator a + (b - a)t + (c - b - a)t^2 of the generating function.
inline Poly gf_numerator(const SequenceParams& p) { return Poly{p.a, p.b - p.a, p.c - p.b - p.a}; }

// Denominator 1 - t - t^2 - 2t^3.
inline Poly gf_denominator() { return Poly{1, -1, -1, -2}; }

inline std::vector<Rational> gf_coefficients(const SequenceParams& params, std::size_t count) {
  if (count == 0) throw DomainError("gf_coefficients: count must be at least 1");
  return series_div(gf_numerator(params), gf_denominator(), count);
}

}  // namespace jacobsthal
