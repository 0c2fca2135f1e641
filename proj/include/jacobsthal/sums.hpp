#pragma once

/**
 * @file sums.hpp
 * @brief Closed forms for prefix, weighted (sum J(k)/x^k) and strided
 *        (sum J(mk + r)) sums, each paired with a brute-force oracle.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jacobsthal/errors.hpp"
#include "jacobsthal/rational.hpp"
#include "jacobsthal/sequence.hpp"

namespace jacobsthal {

// sum_i weights[i] * J(indices[i]); weight 1 when no weights are given.
inline Rational sum_oracle(const SequenceParams& params, std::span<const std::int64_t> indices,
                           std::optional<std::span<const Rational>> weights = std::nullopt) {
  if (weights && weights->size() != indices.size()) {
    throw DomainError("sum_oracle: " + std::to_string(weights->size()) + " weights for " +
                      std::to_string(indices.size()) + " indices");
  }
  std::int64_t top = -1;
  for (auto i : indices) {
    if (i < 0) throw DomainError("sum_oracle: negative index " + std::to_string(i));
    top = std::max(top, i);
  }
  if (top < 0) return Rational();
  const auto terms = range(params, 0, top);
  Rational total;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    const Rational& t = terms[static_cast<std::size_t>(indices[k])];
    total += weights ? (*weights)[k] * t : t;
  }
  return total;
}

// sum_{k=0..n} J(k) for the ordinary sequence (0, 1, 1):
// J(n+1) - 1 when n = 0 (mod 3), J(n+1) otherwise.
inline Rational prefix_sum_closed(std::int64_t n) {
  if (n < 0) throw DomainError("prefix_sum_closed: negative n");
  Rational next = term(SequenceParams::jacobsthal(), n + 1);
  if (detail::mod3(n) == 0) next -= Rational(1);
  return next;
}

namespace detail {

inline void check_weight_argument(const Rational& x, std::int64_t n, const char* who) {
  if (n < 0) throw DomainError(std::string(who) + ": negative n");
  if (x.is_zero()) throw DomainError(std::string(who) + ": x must be nonzero");
  if (x == Rational(2)) throw PoleError(std::string(who) + ": x = 2 is a pole of closed form");
}

// 2 J(n) + (J(n+2) - J(n+1)) x + J(n+1) x^2 - x^(n+1) ((c - b - a) - (a - b) x + a x^2)
inline Rational weighted_numerator(const SequenceParams& p, const Rational& x, std::int64_t n) {
  const auto t = range(p, n, n + 2);
  const Rational x2 = x * x;
  const Rational tail = (p.c - p.b - p.a) - (p.a - p.b) * x + p.a * x2;
  return Rational(2) * t[0] + (t[2] - t[1]) * x + t[1] * x2 - x.pow(n + 1) * tail;
}

}  // namespace detail

// x^3 - x^2 - x - 2, the characteristic polynomial.
inline Rational characteristic_nu(const Rational& x) { return x * x * x - x * x - x - Rational(2); }

// sum_{k=0..n} J(k) / x^k = N(x, n) / (x^n * (2 + x + x^2 - x^3)).
// The denominator is (2 - x)(w1 - x)(w2 - x) = -nu(x).
inline Rational weighted_sum_closed(const SequenceParams& params, const Rational& x, std::int64_t n) {
  detail::check_weight_argument(x, n, "weighted_sum_closed");
  return detail::weighted_numerator(params, x, n) / (x.pow(n) * -characteristic_nu(x));
}

// Same numerator divided by x^n * nu(x), as the formula is usually quoted.
// Off by a factor of -1; kept so the discrepancy stays testable.
inline Rational weighted_sum_printed(const SequenceParams& params, const Rational& x, std::int64_t n) {
  detail::check_weight_argument(x, n, "weighted_sum_printed");
  return detail::weighted_numerator(params, x, n) / (x.pow(n) * characteristic_nu(x));
}

inline Rational weighted_sum_oracle(const SequenceParams& params, const Rational& x, std::int64_t n) {
  if (n < 0) throw DomainError("weighted_sum_oracle: negative n");
  if (x.is_zero()) throw DomainError("weighted_sum_oracle: x must be nonzero");
  std::vector<std::int64_t> idx;
  std::vector<Rational> w;
  const Rational inv = Rational(1) / x;
  Rational p = 1;
  for (std::int64_t k = 0; k <= n; ++k) {
    idx.push_back(k);
    w.push_back(p);
    p *= inv;
  }
  return sum_oracle(params, idx, std::span<const Rational>(w));
}

struct StridedSumContext {
  std::int64_t m = 1;
  Rational trace;  // w1^m + w2^m: 2 if 3 | m, else -1
  Rational mu;     // 2^m + trace
  Rational sigma;  // 2^(m+1) + (1 - 2^m) trace - 2; zero iff 3 | m

  static StridedSumContext make(std::int64_t m) {
    if (m < 1) throw DomainError("strided sum: stride m must be positive");
    StridedSumContext ctx;
    ctx.m = m;
    ctx.trace = detail::mod3(m) == 0 ? Rational(2) : Rational(-1);
    const Rational p = Rational::pow2(m);
    ctx.mu = p + ctx.trace;
    ctx.sigma = Rational::pow2(m + 1) + (Rational(1) - p) * ctx.trace - Rational(2);
    return ctx;
  }
};

inline Rational strided_sum_closed(const SequenceParams& params, std::int64_t m, std::int64_t r,
                                   std::int64_t n) {
  if (m < 1) throw DomainError("strided_sum_closed: stride m must be positive");
  if (r < m) throw DomainError("strided_sum_closed: requires r >= m (r - m is an index)");
  if (n < 0) throw DomainError("strided_sum_closed: negative n");
  const auto ctx = StridedSumContext::make(m);
  if (ctx.sigma.is_zero()) {
    throw DegenerateStrideError("degenerate closed form (sigma=0 for m divisible by 3); use sum_oracle");
  }
  const auto t = range(params, 0, m * (n + 2) + r);
  auto at = [&](std::int64_t i) -> const Rational& { return t[static_cast<std::size_t>(i)]; };
  const Rational p = Rational::pow2(m);
  const Rational span_diff = at(m * (n + 1) + r) - at(r);
  const Rational brace = span_diff + p * at(m * n + r) - p * at(r - m) - ctx.mu * span_diff +
                         at(m * (n + 2) + r) - at(r + m);
  return brace / ctx.sigma;
}

inline Rational strided_sum_oracle(const SequenceParams& params, std::int64_t m, std::int64_t r,
                                   std::int64_t n) {
  if (n < 0) throw DomainError("strided_sum_oracle: negative n");
  std::vector<std::int64_t> idx;
  for (std::int64_t k = 0; k <= n; ++k) idx.push_back(m * k + r);
  return sum_oracle(params, idx);
}

}  // namespace jacobsthal
