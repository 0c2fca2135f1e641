#include <gtest/gtest.h>

#include "jacobsthal/series.hpp"
#include "test_support.hpp"

using namespace jacobsthal;

namespace {

std::vector<Rational> ints(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(SeriesDiv, Examples) {
  EXPECT_EQ(series_div(Poly{0, 1}, Poly{1, -1, -1, -2}, 7), ints({0, 1, 1, 2, 5, 9, 18}));
  EXPECT_EQ(series_div(Poly{1}, Poly{1, -1}, 4), ints({1, 1, 1, 1}));
  EXPECT_EQ(series_div(Poly{1, 2, 3}, Poly{1}, 3), ints({1, 2, 3}));
}

TEST(SeriesDiv, NonUnitLeadingCoefficient) {
  // 1 / (2 - t) = 1/2 + t/4 + t^2/8 + ...
  EXPECT_EQ(series_div(Poly{1}, Poly{2, -1}, 3), (std::vector<Rational>{Rational(1, 2), Rational(1, 4), Rational(1, 8)}));
}

TEST(SeriesDiv, ErrorPaths) {
  EXPECT_THROW(series_div(Poly{1}, Poly{0, 1}, 3), NotUnitError);
  EXPECT_THROW(series_div(Poly{1}, Poly{}, 3), NotUnitError);
  EXPECT_THROW(series_div(Poly{1}, Poly{1}, 0), DomainError);
}

TEST(Poly, DegreeAndTrim) {
  EXPECT_EQ(Poly({1, 2, 0, 0}).degree(), 1);
  EXPECT_EQ(Poly().degree(), Poly::kZeroDegree);
  EXPECT_EQ(Poly({0, 0}).degree(), Poly::kZeroDegree);
  EXPECT_EQ(Poly({1, 2, 0}), Poly({1, 2}));
  EXPECT_EQ(Poly({1, 2, 0}).trimmed().size(), 2U);
}

TEST(GeneratingFunction, Examples) {
  EXPECT_EQ(gf_coefficients(SequenceParams::jacobsthal(), 7), ints({0, 1, 1, 2, 5, 9, 18}));
  EXPECT_EQ(gf_coefficients(SequenceParams::jacobsthal_lucas(), 6), ints({2, 1, 5, 10, 17, 37}));
  EXPECT_EQ(gf_coefficients(SequenceParams(1, 2, 3), 7), ints({1, 2, 3, 7, 14, 27, 55}));
  EXPECT_THROW(gf_coefficients(SequenceParams::jacobsthal(), 0), DomainError);
}

TEST(GeneratingFunctionProperty, MatchesRecurrence) {
  test_support::SeedGenerator gen(5);
  auto params = test_support::reference_params();
  for (int i = 0; i < 10; ++i) params.push_back(gen.params());
  for (const auto& p : params) {
    EXPECT_EQ(gf_coefficients(p, 256), range(p, 0, 255));
  }
}

TEST(GeneratingFunctionProperty, ReconstructsNumerator) {
  test_support::SeedGenerator gen(6);
  for (int i = 0; i < 20; ++i) {
    const auto p = gen.params();
    const std::size_t count = 40;
    const auto coeffs = gf_coefficients(p, count);
    const auto back = series_mul(Poly(coeffs), gf_denominator(), count);
    std::vector<Rational> expected(count);
    for (std::size_t k = 0; k < 3; ++k) expected[k] = gf_numerator(p)[k];
    EXPECT_EQ(back, expected);
  }
}
