#pragma once

/**
 * @file closed_forms.hpp
 * @brief Binet form over Q(w) and the 2^n + periodic decomposition.
 *
 *   J(n) = A 2^n - B w1^n + C w2^n
 *   J(n) = (rho 2^n - Vgen(n)) / 7
 *
 * Both must agree with term() exactly for every n.
 */

#include <cstdint>

#include "jacobsthal/eisenstein.hpp"
#include "jacobsthal/errors.hpp"
#include "jacobsthal/rational.hpp"
#include "jacobsthal/sequence.hpp"

namespace jacobsthal {

struct BinetCoefficients {
  Rational A;
  EisensteinRational B;
  EisensteinRational C;
};

inline BinetCoefficients binet_coefficients(const SequenceParams& p) {
  const auto w1 = EisensteinRational::omega1();
  const auto w2 = EisensteinRational::omega2();
  const EisensteinRational two(2);
  const EisensteinRational a(p.a), b(p.b), c(p.c);

  // (2 - w1)(2 - w2) = 7
  const EisensteinRational a_den = (two - w1) * (two - w2);
  const EisensteinRational b_num = c - (two + w2) * b + two * w2 * a;
  const EisensteinRational c_num = c - (two + w1) * b + two * w1 * a;
  const EisensteinRational b_den = (two - w1) * (w1 - w2);
  const EisensteinRational c_den = (two - w2) * (w1 - w2);

  return {eis_rational_part(EisensteinRational(p.rho) / a_den), b_num / b_den, c_num / c_den};
}

inline Rational binet_term(const BinetCoefficients& k, std::int64_t n) {
  if (n < 0) throw DomainError("binet_term: negative index " + std::to_string(n));
  const auto e = static_cast<std::uint64_t>(n);
  const EisensteinRational value = EisensteinRational(k.A * Rational::pow2(n)) -
                                   k.B * eis_pow(EisensteinRational::omega1(), e) +
                                   k.C * eis_pow(EisensteinRational::omega2(), e);
  return eis_rational_part(value);
}

inline Rational binet_term(const SequenceParams& params, std::int64_t n) {
  return binet_term(binet_coefficients(params), n);
}

inline Rational decomposed_term(const SequenceParams& params, std::int64_t n) {
  if (n < 0) throw DomainError("decomposed_term: negative index " + std::to_string(n));
  const PeriodicTriple v = generalized_v(params);
  return (params.rho * Rational::pow2(n) - v.at(n)) / Rational(7);
}

}  // namespace jacobsthal
