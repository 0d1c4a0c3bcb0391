#include <gtest/gtest.h>

#include <cmath>

#include "permbinom/sharpness.hpp"

using namespace permbinom;

namespace {

const SharpnessFinding* find_k(const SharpnessProbe& probe, std::uint64_t k) {
  for (const auto& f : probe.findings) {
    if (f.k == k) return &f;
  }
  return nullptr;
}

bool gcd_direct(std::uint64_t n, std::uint64_t p, std::uint64_t k) {
  return boost::multiprecision::gcd(BigInt(n), (nt::big_pow(p, k) - 1) / 3) == 1;
}

}  // namespace

TEST(FixedDecimal, Formatting) {
  EXPECT_EQ((FixedDecimal{BigInt(12345), 4}).str(), "1.2345");
  EXPECT_EQ((FixedDecimal{BigInt(-5), 3}).str(), "-0.005");
  EXPECT_EQ((FixedDecimal{BigInt(0), 2}).str(), "0.00");
}

TEST(FixedDecimal, ThresholdComparisons) {
  const FixedDecimal v{BigInt(19999984), 7};  // 1.9999984
  EXPECT_TRUE(v.certainly_greater("1.999998"));
  EXPECT_FALSE(v.certainly_greater("1.9999984"));
  EXPECT_TRUE(v.certainly_less("2"));
  EXPECT_FALSE(v.certainly_less("1.9999984"));
  const FixedDecimal w{BigInt(-19999991), 7};
  EXPECT_TRUE(w.certainly_less("-1.999999"));
  EXPECT_EQ(FixedDecimal::parse("-0.25", 3), BigInt(-250));
  EXPECT_THROW(FixedDecimal::parse("1.23456", 3), Error);
  EXPECT_THROW(FixedDecimal::parse("1.2x", 3), Error);
}

TEST(Convergents, SquareRootOfTwo) {
  const auto cs = convergents_of(boost::multiprecision::sqrt(HighFloat(2)), 5);
  ASSERT_EQ(cs.size(), 5U);
  const std::vector<std::pair<int, int>> expected{{1, 1}, {3, 2}, {7, 5}, {17, 12}, {41, 29}};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(cs[i].first, expected[i].first);
    EXPECT_EQ(cs[i].second, expected[i].second);
  }
}

TEST(Convergents, RationalInputTerminates) {
  const auto cs = convergents_of(HighFloat(7) / 4, 10);
  ASSERT_FALSE(cs.empty());
  EXPECT_EQ(cs.back().first, 7);
  EXPECT_EQ(cs.back().second, 4);
}

TEST(Convergents, ApproximationQuality) {
  const HighFloat pi = boost::math::constants::pi<HighFloat>();
  for (const HighFloat& x : {pi, boost::multiprecision::sqrt(HighFloat(73)) / 9, HighFloat("0.6343")}) {
    for (const auto& [m, n] : convergents_of(x, 25)) {
      const HighFloat err = boost::multiprecision::abs(x - HighFloat(m) / HighFloat(n));
      EXPECT_LT(err, 1 / (HighFloat(n) * HighFloat(n)));
    }
  }
}

TEST(Sharpness, WitnessesForF73) {
  const SharpnessProbe probe = sharpness_probe(73, 35, 12, {40, 2000});
  EXPECT_EQ(probe.kappa, 7);
  const SharpnessFinding* near_plus = find_k(probe, 1217);
  const SharpnessFinding* near_minus = find_k(probe, 1578);
  ASSERT_NE(near_plus, nullptr);
  ASSERT_NE(near_minus, nullptr);
  EXPECT_TRUE(near_plus->deviation.certainly_greater("1.999998451823"));
  EXPECT_TRUE(near_minus->deviation.certainly_less("-1.99999906282"));
  EXPECT_EQ(near_plus->deviation.str().substr(0, 15), "1.9999984518230");
  EXPECT_EQ(near_minus->deviation.str().substr(0, 15), "-1.999999062820");
  EXPECT_TRUE(near_plus->gcd_ok);
  EXPECT_FALSE(near_minus->gcd_ok);  // 7 divides (73^1578 - 1)/3
}

TEST(Sharpness, ConvergentSourcesForF73) {
  const SharpnessProbe probe = sharpness_probe(73, 35, 12, {40, 2000});
  bool half_turn = false, full_turn = false;
  for (const auto& c : probe.convergents) {
    if (c.source == "theta/2pi" && c.numerator == 386 && c.denominator == 1217) full_turn = true;
    if (c.source == "theta/pi" && c.numerator == 1001 && c.denominator == 1578) half_turn = true;
  }
  EXPECT_TRUE(full_turn);
  EXPECT_TRUE(half_turn);
}

TEST(Sharpness, InvariantsOnEveryFinding) {
  for (auto [p, n] : {std::pair{73ULL, 35ULL}, {7ULL, 1ULL}, {13ULL, 5ULL}, {31ULL, 7ULL}}) {
    const SharpnessProbe probe = sharpness_probe(p, n, 12, {40, 3000});
    for (const auto& f : probe.findings) {
      EXPECT_TRUE(f.cos_check) << p << " k=" << f.k;
      EXPECT_EQ(f.gcd_ok, gcd_direct(n, p, f.k)) << p << " k=" << f.k;
      const double bound = 2.0 + 8.0 / std::pow(std::sqrt(static_cast<double>(p)), static_cast<double>(f.k));
      EXPECT_LE(std::fabs(f.deviation.to_double()), bound) << p << " k=" << f.k;
    }
  }
}

TEST(Sharpness, SmallProbeForF7) {
  const SharpnessProbe probe = sharpness_probe(7, 1, 5);
  ASSERT_FALSE(probe.findings.empty());
  // k = 1 carries the full correction: d_1 = (8 - 1)/sqrt(7) = sqrt(7).
  ASSERT_EQ(probe.findings.front().k, 1U);
  EXPECT_NEAR(probe.findings.front().deviation.to_double(), std::sqrt(7.0), 1e-12);
  for (const auto& f : probe.findings) {
    if (f.k >= 2) {
      EXPECT_LE(std::fabs(f.deviation.to_double()), 2.0) << f.k;
    }
  }
}

TEST(Sharpness, DeviationMatchesDoubleArithmetic) {
  for (std::uint64_t p : {7ULL, 13ULL, 73ULL}) {
    for (std::uint64_t k = 1; k <= 30; ++k) {
      const Epsilons eps = epsilons_from_residue(nt::pow_mod(p, k, 9), 1);
      const double s_k = static_cast<double>(pi_trace(p, k));
      const double expected =
          (3.0 * (eps.e1 + eps.e2) + 10.0 + 2.0 * s_k) / (2.0 * std::pow(static_cast<double>(p), k / 2.0));
      EXPECT_NEAR(deviation_for(p, k, eps, 40).to_double(), expected, 1e-12) << p << " k=" << k;
    }
  }
}

TEST(Sharpness, SupersingularPrimesAlternate) {
  const SharpnessProbe probe = sharpness_probe(5, 1, 6);
  EXPECT_EQ(probe.kappa, 0);
  ASSERT_EQ(probe.findings.size(), 6U);
  for (const auto& f : probe.findings) {
    EXPECT_EQ(f.k % 2, 0U);
    // s_k = 2 (-5)^(k/2), so d_k tends to 2 (-1)^(k/2)
    const double sign = (f.k / 2) % 2 == 0 ? 1.0 : -1.0;
    EXPECT_NEAR(f.deviation.to_double(), 2.0 * sign, 8.0 / std::pow(5.0, f.k / 2.0) + 1e-12);
  }
}

TEST(Sharpness, Deterministic) {
  const SharpnessProbe a = sharpness_probe(73, 35, 12, {40, 2000});
  const SharpnessProbe b = sharpness_probe(73, 35, 12, {40, 2000});
  ASSERT_EQ(a.findings.size(), b.findings.size());
  for (std::size_t i = 0; i < a.findings.size(); ++i) {
    EXPECT_EQ(a.findings[i].deviation.str(), b.findings[i].deviation.str());
  }
}
