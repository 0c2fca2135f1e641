#pragma once

// Test-only helpers: a fixed-width recurrence that shares no code with the
// library, and a seeded generator of small rational seed triples.

#include <cstdint>
#include <random>
#include <vector>

#include "jacobsthal/rational.hpp"
#include "jacobsthal/sequence.hpp"

namespace jacobsthal::test_support {

// Integer seeds only; exact while values fit in 127 bits (n <= ~120 for small seeds).
inline std::vector<__int128> int_recurrence(std::int64_t a, std::int64_t b, std::int64_t c, int count) {
  std::vector<__int128> s{a, b, c};
  while (static_cast<int>(s.size()) < count) {
    const auto k = s.size();
    s.push_back(s[k - 1] + s[k - 2] + 2 * s[k - 3]);
  }
  s.resize(static_cast<std::size_t>(count));
  return s;
}

inline Rational from_int128(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  BigInt out = 0;
  BigInt place = 1;
  while (u != 0) {
    out += place * static_cast<unsigned>(u % 10);
    place *= 10;
    u /= 10;
  }
  return Rational(neg ? BigInt(-out) : out);
}

class SeedGenerator {
 public:
  explicit SeedGenerator(std::uint64_t seed) : rng_(seed) {}

  // Numerator in [-bound, bound], denominator in [1, bound].
  Rational rational(int bound = 20) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, bound);
    return Rational(BigInt(num(rng_)), BigInt(den(rng_)));
  }

  SequenceParams params(int bound = 20) { return {rational(bound), rational(bound), rational(bound)}; }

  std::int64_t index(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

 private:
  std::mt19937_64 rng_;
};

inline std::vector<SequenceParams> reference_params() {
  return {SequenceParams::jacobsthal(), SequenceParams::jacobsthal_lucas(), SequenceParams(1, 2, 3),
          SequenceParams(5, -1, 2), SequenceParams(Rational(1, 2), Rational(-3, 7), 4)};
}

}  // namespace jacobsthal::test_support
