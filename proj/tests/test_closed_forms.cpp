#include <gtest/gtest.h>

#include "jacobsthal/closed_forms.hpp"
#include "test_support.hpp"

using namespace jacobsthal;

TEST(BinetCoefficients, LeadingCoefficient) {
  EXPECT_EQ(binet_coefficients(SequenceParams::jacobsthal()).A, Rational(2, 7));
  EXPECT_EQ(binet_coefficients(SequenceParams::jacobsthal_lucas()).A, Rational(8, 7));
  EXPECT_EQ(binet_coefficients(SequenceParams(1, 2, 3)).A, Rational(6, 7));
}

TEST(BinetCoefficients, OrdinaryJacobsthalOmegaCoefficient) {
  // B = (3 + 2 i sqrt3) / 21. With i sqrt3 = w1 - w2 = 1 + 2w this is (5 + 4w)/21.
  const auto k = binet_coefficients(SequenceParams::jacobsthal());
  EXPECT_EQ(k.B, EisensteinRational(Rational(5, 21), Rational(4, 21)));
  // The w2 coefficient is -conj(B) for rational seeds.
  EXPECT_EQ(k.C, -k.B.conj());
}

TEST(BinetCoefficients, ReproduceSeeds) {
  test_support::SeedGenerator gen(3);
  for (int i = 0; i < 100; ++i) {
    const auto p = gen.params();
    const auto k = binet_coefficients(p);
    EXPECT_EQ(binet_term(k, 0), p.a);
    EXPECT_EQ(binet_term(k, 1), p.b);
    EXPECT_EQ(binet_term(k, 2), p.c);
    EXPECT_EQ(k.A, p.rho / Rational(7));
  }
}

TEST(BinetTerm, Examples) {
  EXPECT_EQ(binet_term(SequenceParams::jacobsthal(), 5), Rational(9));
  EXPECT_EQ(binet_term(SequenceParams::jacobsthal_lucas(), 4), Rational(17));
  EXPECT_EQ(binet_term(SequenceParams(1, 2, 3), 0), Rational(1));
  EXPECT_THROW(binet_term(SequenceParams::jacobsthal(), -1), DomainError);
}

TEST(BinetTerm, NonzeroOmegaPartIsHardError) {
  auto k = binet_coefficients(SequenceParams::jacobsthal());
  k.B.om += Rational(1);
  EXPECT_THROW(binet_term(k, 1), NonRealResidueError);
}

TEST(DecomposedTerm, Examples) {
  EXPECT_EQ(decomposed_term(SequenceParams::jacobsthal(), 4), Rational(5));
  EXPECT_EQ(decomposed_term(SequenceParams(1, 2, 3), 3), Rational(7));
  EXPECT_EQ(decomposed_term(SequenceParams::jacobsthal_lucas(), 0), Rational(2));
  EXPECT_THROW(decomposed_term(SequenceParams::jacobsthal(), -2), DomainError);
}

TEST(ClosedFormsProperty, TripleAgreement) {
  test_support::SeedGenerator gen(2024);
  auto params = test_support::reference_params();
  for (int i = 0; i < 10; ++i) params.push_back(gen.params());
  for (const auto& p : params) {
    const auto terms = range(p, 0, 120);
    const auto k = binet_coefficients(p);
    for (std::int64_t n = 0; n <= 120; ++n) {
      const auto& t = terms[static_cast<std::size_t>(n)];
      ASSERT_EQ(binet_term(k, n), t) << "n=" << n;
      ASSERT_EQ(decomposed_term(p, n), t) << "n=" << n;
    }
  }
}

TEST(ClosedFormsProperty, LucasDecomposition) {
  // 7 j(n) = 2^(n+3) + 3 V(n)
  const auto j = range(SequenceParams::jacobsthal_lucas(), 0, 100);
  const auto v = companions(SequenceParams::jacobsthal()).V;
  for (std::int64_t n = 0; n <= 100; ++n) {
    EXPECT_EQ(Rational(7) * j[static_cast<std::size_t>(n)], Rational::pow2(n + 3) + Rational(3) * v.at(n));
  }
}

TEST(ClosedFormsProperty, ResidueAfterExponentialPartHasPeriodThree) {
  test_support::SeedGenerator gen(99);
  for (int i = 0; i < 20; ++i) {
    const auto p = gen.params();
    const auto t = range(p, 0, 60);
    auto residue = [&](std::int64_t n) {
      return Rational(7) * t[static_cast<std::size_t>(n)] - p.rho * Rational::pow2(n);
    };
    for (std::int64_t n = 0; n + 3 <= 60; ++n) EXPECT_EQ(residue(n), residue(n + 3));
  }
}
