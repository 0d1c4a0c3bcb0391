#include <gtest/gtest.h>

#include "permbinom/curves.hpp"

using namespace permbinom;

namespace {

// Counts (x, y) pairs with y^2 = x^3 + Ax + B directly, plus the point at infinity.
std::int64_t exhaustive_count(std::uint64_t p, std::uint64_t A, std::uint64_t B) {
  std::int64_t count = 1;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t rhs = (x * x % p * x + A * x + B) % p;
    for (std::uint64_t y = 0; y < p; ++y) count += (y * y % p == rhs) ? 1 : 0;
  }
  return count;
}

std::uint64_t inv4(std::uint64_t p) { return nt::pow_mod(4, p - 2, p); }

ErrorCode error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST(CountPointsPrime, Examples) {
  EXPECT_EQ(count_points_prime(7, 0, 2), 9);
  EXPECT_EQ(count_points_prime(5, 1, 1), 9);
  EXPECT_EQ(count_points_prime(73, 0, inv4(73)), 81);
  EXPECT_EQ(error_of([] { count_points_prime(2, 1, 1); }), ErrorCode::kEvenPrime);
}

TEST(CountPointsPrime, MatchesExhaustiveLoop) {
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    for (std::uint64_t A = 0; A < p; ++A) {
      for (std::uint64_t B = 0; B < p; ++B) EXPECT_EQ(count_points_prime(p, A, B), exhaustive_count(p, A, B));
    }
  }
}

TEST(PointCountResidue, Examples) {
  EXPECT_EQ(point_count_residue(7, 0, 2), 1U);
  EXPECT_EQ(point_count_residue(13, 0, 10), 8U);
  for (std::uint64_t p : {5ULL, 11ULL, 17ULL, 23ULL, 29ULL}) {
    for (std::uint64_t B = 0; B < p; ++B) EXPECT_EQ(point_count_residue(p, 0, B), 0U) << p << " B=" << B;
  }
  EXPECT_EQ(error_of([] { point_count_residue(3, 1, 1); }), ErrorCode::kSmallPrime);
  EXPECT_EQ(error_of([] { point_count_residue(2, 1, 1); }), ErrorCode::kEvenPrime);
}

TEST(PointCountResidue, CongruentToPointCount) {
  for (std::uint64_t p = 5; p <= 31; ++p) {
    if (!nt::is_prime(p)) continue;
    for (std::uint64_t A = 0; A < p; ++A) {
      for (std::uint64_t B = 0; B < p; ++B) {
        const std::int64_t diff = count_points_prime(p, A, B) - static_cast<std::int64_t>(p) - 1;
        EXPECT_EQ(static_cast<std::uint64_t>(nt::mod_floor(diff, static_cast<std::int64_t>(p))),
                  point_count_residue(p, A, B))
            << p << " " << A << " " << B;
      }
    }
  }
}

TEST(Kappa, Examples) {
  EXPECT_EQ(compute_kappa(7).kappa, 1);
  EXPECT_EQ(compute_kappa(13).kappa, -5);
  EXPECT_EQ(compute_kappa(73).kappa, 7);
  EXPECT_EQ(compute_kappa(73).curve_count, 81);
  EXPECT_EQ(compute_kappa(5).kappa, 0);
  EXPECT_EQ(compute_kappa(2).kappa, 0);
  EXPECT_EQ(error_of([] { compute_kappa(3); }), ErrorCode::kUnsupportedPrime);
  EXPECT_EQ(error_of([] { compute_kappa(9); }), ErrorCode::kNonPrime);
}

TEST(Kappa, HardCodedValuesMatchTheResidue) {
  EXPECT_EQ(compute_kappa(7).residue, 1U);
  EXPECT_EQ(compute_kappa(13).residue, 8U);
}

TEST(Kappa, CrossCheckHoldsUpTo499) {
  for (std::uint64_t p = 5; p <= 499; ++p) {
    if (!nt::is_prime(p)) continue;
    const KappaRecord rec = compute_kappa(p);
    EXPECT_EQ(rec.curve_count, static_cast<std::int64_t>(p) + 1 + rec.kappa);
    EXPECT_EQ(rec.curve_count, exhaustive_count(p, 0, inv4(p)));
    EXPECT_LE(rec.kappa * rec.kappa, static_cast<std::int64_t>(4 * p));
  }
}

TEST(Trace, Examples) {
  EXPECT_EQ(pi_trace(73, 1), -7);
  EXPECT_EQ(pi_trace(73, 0), 2);
  EXPECT_EQ(pi_trace(73, 2), -97);
  EXPECT_EQ(pi_trace(2, 2), -4);
  EXPECT_EQ(pi_trace(7, 2), -13);
  EXPECT_EQ(pi_trace(13, 2), -1);
}

TEST(Trace, MatrixPowerMatchesIteration) {
  for (std::uint64_t p : {2ULL, 5ULL, 7ULL, 13ULL, 73ULL, 1009ULL}) {
    const auto seq = trace_sequence(p, 301);
    for (std::uint64_t j = 0; j <= 300; ++j) EXPECT_EQ(pi_trace_matrix(p, j), seq[j]) << p << " j=" << j;
    EXPECT_EQ(pi_trace(p, 300), seq[300]);
  }
}

TEST(Trace, HasseBound) {
  for (std::uint64_t p : {2ULL, 5ULL, 7ULL, 13ULL, 19ULL, 31ULL, 73ULL, 97ULL}) {
    const auto seq = trace_sequence(p, 65);
    for (std::uint64_t j = 0; j <= 64; ++j) EXPECT_LE(seq[j] * seq[j], 4 * nt::big_pow(p, j));
  }
}

TEST(ExtensionCount, F49) {
  const FieldSpec f = make_field(7, 2);
  EXPECT_EQ(count_points_extension(f, f.zero(), f.inv(f.from_int(4))), 63);
}

TEST(ExtensionCount, F169) {
  const FieldSpec f = make_field(13, 2);
  // s_2 = kappa^2 - 2*13 = -1, so the count is 169 + 1 + 1.
  EXPECT_EQ(count_points_extension(f, f.zero(), f.inv(f.from_int(4))), 171);
}

TEST(ExtensionCount, MatchesTraceForSeveralPrimes) {
  for (std::uint64_t p : {7ULL, 13ULL, 19ULL, 31ULL, 37ULL, 43ULL, 61ULL, 73ULL}) {
    for (unsigned j : {1U, 2U}) {
      const FieldSpec f = make_field(p, j);
      const std::int64_t count = count_points_extension(f, f.zero(), f.inv(f.from_int(4)));
      EXPECT_EQ(BigInt(count), nt::big_pow(p, j) + 1 - pi_trace(p, j)) << p << "^" << j;
    }
  }
}

TEST(ExtensionCount, F25HasseRange) {
  const FieldSpec f = make_field(5, 2);
  for (std::uint64_t a = 0; a < f.q(); ++a) {
    for (std::uint64_t b = 0; b < f.q(); ++b) {
      const FieldElement A{a}, B{b};
      const FieldElement disc = f.add(f.mul(f.from_int(4), f.pow(A, 3U)), f.mul(f.from_int(27), f.mul(B, B)));
      if (disc.is_zero()) continue;
      const std::int64_t count = count_points_extension(f, A, B);
      EXPECT_GE(count, 16);
      EXPECT_LE(count, 36);
    }
  }
  EXPECT_EQ(error_of([] { const FieldSpec f4 = make_field(2, 2); count_points_extension(f4, f4.one(), f4.one()); }),
            ErrorCode::kEvenCharacteristic);
}

TEST(CubicSums, CharacteristicTwo) {
  EXPECT_EQ(char2_cubic_sum(1), 2);
  EXPECT_EQ(char2_cubic_sum(2), -10);
  EXPECT_EQ(char2_cubic_sum(3), 14);
  for (unsigned k = 1; k <= 6; ++k) {
    std::int64_t power = 1;
    for (unsigned i = 0; i <= k; ++i) power *= -2;
    EXPECT_EQ(char2_cubic_sum(k), -2 + power) << k;
  }
}

TEST(CubicSums, OddCharacteristic) {
  for (auto [p, k] : {std::pair{7ULL, 1U}, {13ULL, 1U}, {19ULL, 1U}, {73ULL, 1U}, {5ULL, 2U},
                      {7ULL, 2U}, {11ULL, 2U}, {13ULL, 2U}, {7ULL, 3U}, {5ULL, 4U}}) {
    const FieldSpec f = make_field(p, k);
    EXPECT_EQ(BigInt(odd_cubic_sum(f)), -2 - pi_trace(p, k)) << p << "^" << k;
  }
}
