#include <gtest/gtest.h>

#include "jacobsthal/sequence.hpp"
#include "test_support.hpp"

using namespace jacobsthal;

namespace {

std::vector<Rational> ints(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(Term, OrdinaryJacobsthalPrefix) {
  EXPECT_EQ(range(SequenceParams::jacobsthal(), 0, 6), ints({0, 1, 1, 2, 5, 9, 18}));
}

TEST(Term, JacobsthalLucasPrefix) {
  EXPECT_EQ(range(SequenceParams::jacobsthal_lucas(), 0, 5), ints({2, 1, 5, 10, 17, 37}));
}

TEST(Term, GeneralTermsMatchSymbolicPrefix) {
  // a, b, c, 2a+b+c, 2a+3b+2c, 4a+4b+5c, 10a+9b+9c at (1, 2, 3)
  const SequenceParams p(1, 2, 3);
  EXPECT_EQ(term(p, 6), Rational(55));
  EXPECT_EQ(range(p, 3, 5), ints({7, 14, 27}));
  EXPECT_EQ(range(SequenceParams::jacobsthal(), 5, 5), ints({9}));
}

TEST(Term, Seeds) {
  const SequenceParams p(Rational(1, 3), -4, Rational(5, 7));
  EXPECT_EQ(term(p, 0), p.a);
  EXPECT_EQ(term(p, 1), p.b);
  EXPECT_EQ(term(p, 2), p.c);
}

TEST(Term, ErrorPaths) {
  EXPECT_THROW(term(SequenceParams::jacobsthal(), -1), DomainError);
  EXPECT_THROW(range(SequenceParams::jacobsthal(), 4, 3), DomainError);
  EXPECT_THROW(range(SequenceParams::jacobsthal(), -1, 3), DomainError);
}

TEST(Term, AgreesWithFixedWidthOracle) {
  for (auto [a, b, c] : {std::array<long, 3>{0, 1, 1}, {2, 1, 5}, {1, 2, 3}, {5, -1, 2}, {-7, 3, 0}}) {
    const auto expected = test_support::int_recurrence(a, b, c, 100);
    const auto got = range(SequenceParams(a, b, c), 0, 99);
    for (std::size_t n = 0; n < expected.size(); ++n) {
      ASSERT_EQ(got[n], test_support::from_int128(expected[n])) << "n=" << n;
    }
  }
}

TEST(Params, DerivedConstants) {
  const auto j = SequenceParams::jacobsthal();
  EXPECT_EQ(j.rho, Rational(2));
  EXPECT_EQ(j.quartic, Rational(1));
  const SequenceParams p(1, 2, 3);
  EXPECT_EQ(p.rho, Rational(6));
  // 4 + 12 + 9 - 6 - 18
  EXPECT_EQ(p.quartic, Rational(1));
  EXPECT_EQ(SequenceParams::jacobsthal_lucas().quartic, Rational(16 + 3 + 25 - 20 - 15));
}

TEST(Periodic, ValueExamples) {
  const auto cs = companions(SequenceParams::jacobsthal());
  EXPECT_EQ(periodic_value(cs.V, 4), Rational(-3));
  EXPECT_EQ(periodic_value(cs.V, 6), Rational(2));
  EXPECT_EQ(periodic_value(companions(SequenceParams(1, 2, 3)).Vgen, 2), Rational(3));
  EXPECT_EQ(periodic_value(cs.V, -1), Rational(1));
  EXPECT_EQ(periodic_value(cs.V, -3), Rational(2));
}

TEST(Companions, OrdinaryJacobsthalTables) {
  const auto cs = companions(SequenceParams::jacobsthal());
  EXPECT_EQ(cs.V, (PeriodicTriple{2, -3, 1}));
  EXPECT_EQ(cs.Vgen, cs.V);
  EXPECT_EQ(cs.W, (PeriodicTriple{2, 1, -3}));
  EXPECT_EQ(cs.Wgen, cs.W);
  // T(n) = W(n+1) W(n+2): 1*(-3), (-3)*2, 2*1
  EXPECT_EQ(cs.T, (PeriodicTriple{-3, -6, 2}));
  // U(r) = 1, -1, 0 for r = 1, 2, 0 (mod 3).
  EXPECT_EQ(cs.U.at(1), Rational(1));
  EXPECT_EQ(cs.U.at(2), Rational(-1));
  EXPECT_EQ(cs.U.at(0), Rational(0));
}

TEST(Companions, GeneralizedV) {
  EXPECT_EQ(companions(SequenceParams(1, 2, 3)).Vgen, (PeriodicTriple{-1, -2, 3}));
}

TEST(Companions, UMatchesLucasMinusJacobsthal) {
  // U(r) = j(r-1) - J(r+1) for r >= 1.
  const auto cs = companions(SequenceParams::jacobsthal());
  const auto J = range(SequenceParams::jacobsthal(), 0, 80);
  const auto j = range(SequenceParams::jacobsthal_lucas(), 0, 80);
  for (std::size_t r = 1; r + 1 <= 80; ++r) {
    EXPECT_EQ(cs.U.at(static_cast<std::int64_t>(r)), j[r - 1] - J[r + 1]) << r;
  }
}

TEST(CompanionsProperty, Invariants) {
  test_support::SeedGenerator gen(7);
  for (int i = 0; i < 200; ++i) {
    const auto p = gen.params();
    const auto cs = companions(p);
    const std::array<Rational, 3> seeds{p.a, p.b, p.c};
    for (std::int64_t n = -3; n < 6; ++n) {
      EXPECT_EQ(cs.Vgen.at(n + 2) + cs.Vgen.at(n + 1) + cs.Vgen.at(n), Rational(0));
      EXPECT_EQ(Rational(7) * cs.Wgen.at(n + 2), Rational(5) * cs.Vgen.at(n + 1) - Rational(3) * cs.Vgen.at(n));
      EXPECT_EQ(cs.T.at(n), cs.Wgen.at(n + 1) * cs.Wgen.at(n + 2));
      EXPECT_EQ(periodic_value(cs.Vgen, n), periodic_value(cs.Vgen, n + 3));
    }
    for (std::int64_t n = 0; n < 3; ++n) {
      EXPECT_EQ((p.rho * Rational::pow2(n) - cs.Vgen.at(n)) / Rational(7), seeds[static_cast<std::size_t>(n)]);
    }
    EXPECT_TRUE(cs.Vgen.is_anti_recurrent());
    EXPECT_TRUE(cs.Wgen.is_anti_recurrent());
  }
}

TEST(TermProperty, LinearInSeeds) {
  test_support::SeedGenerator gen(11);
  const auto ea = range(SequenceParams(1, 0, 0), 0, 60);
  const auto eb = range(SequenceParams(0, 1, 0), 0, 60);
  const auto ec = range(SequenceParams(0, 0, 1), 0, 60);
  for (int i = 0; i < 50; ++i) {
    const auto p = gen.params();
    const auto got = range(p, 0, 60);
    for (std::size_t n = 0; n <= 60; ++n) {
      ASSERT_EQ(got[n], p.a * ea[n] + p.b * eb[n] + p.c * ec[n]);
    }
  }
}
