#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permbinom/curves.hpp"
#include "permbinom/error.hpp"
#include "permbinom/field.hpp"
#include "permbinom/number_theory.hpp"
#include "permbinom/permutation.hpp"

namespace permbinom {

/// Reduced fraction num/den with den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t n, std::int64_t d) {
    if (d == 0) throw Error(ErrorCode::kDivisionByZero, "zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    return {n / (g == 0 ? 1 : g), d / (g == 0 ? 1 : g)};
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

  bool operator==(const Rational&) const = default;
};

/// Exact real number rational + coeff * sqrt(radicand).
struct QuadraticSurd {
  Rational rational;
  Rational coeff;
  std::uint64_t radicand = 0;

  /// Exact floor; uses an integer square root for the irrational part.
  std::int64_t floor() const {
    // Put both parts over the common denominator d: (a + b sqrt(n)) / d.
    const std::int64_t d = std::lcm(rational.den, coeff.den);
    const std::int64_t a = rational.num * (d / rational.den);
    const std::int64_t b = coeff.num * (d / coeff.den);
    const auto bb = static_cast<unsigned __int128>(b < 0 ? -b : b);
    const auto scaled = static_cast<std::uint64_t>(bb * bb * radicand);
    const std::uint64_t root = nt::isqrt(scaled);
    const bool exact = root * root == scaled;
    // floor(b sqrt(n))
    const std::int64_t floor_b =
        b >= 0 ? static_cast<std::int64_t>(root) : -static_cast<std::int64_t>(root) - (exact ? 0 : 1);
    return nt::floor_div(a + floor_b, d);
  }

  std::int64_t ceil() const {
    QuadraticSurd negated{{-rational.num, rational.den}, {-coeff.num, coeff.den}, radicand};
    return -negated.floor();
  }

  double to_double() const {
    return rational.to_double() + coeff.to_double() * std::sqrt(static_cast<double>(radicand));
  }

  std::string str() const {
    return rational.str() + (coeff.num < 0 ? " - " : " + ") +
           Rational{coeff.num < 0 ? -coeff.num : coeff.num, coeff.den}.str() + "*sqrt(" +
           std::to_string(radicand) + ")";
  }
};

struct SurdInterval {
  QuadraticSurd lower;
  QuadraticSurd upper;
};

struct IntInterval {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  bool contains(std::int64_t v) const { return lower <= v && v <= upper; }
};

/// Throws unless q is an odd prime power.
inline nt::PrimePower require_prime_power(std::uint64_t q) {
  const auto pp = nt::as_prime_power(q);
  if (!pp) throw Error(ErrorCode::kNotPrimePower, std::to_string(q) + " is not a prime power");
  return *pp;
}

/// (q - 2 + (-1)^n) / 2.
inline std::int64_t closed_count_r2(std::uint64_t q, std::uint64_t n) {
  require_prime_power(q);
  if (q % 2 == 0) throw Error(ErrorCode::kEvenQ, "q must be odd");
  require_coprime(n, (q - 1) / 2);
  return (static_cast<std::int64_t>(q) - 2 + (n % 2 == 0 ? 1 : -1)) / 2;
}

struct Epsilons {
  int e1 = 1;
  int e2 = 1;
  bool operator==(const Epsilons&) const = default;
};

/// e1 = -2 iff q - 3n = 1 (mod 9), e2 = -2 iff 3 | n; q is given by its residue mod 9.
inline Epsilons epsilons_from_residue(std::uint64_t q_mod_9, std::uint64_t n) {
  const std::int64_t diff = nt::mod_floor(static_cast<std::int64_t>(q_mod_9 % 9) -
                                              3 * static_cast<std::int64_t>(n % 9),
                                          9);
  return {diff == 1 ? -2 : 1, n % 3 == 0 ? -2 : 1};
}

inline Epsilons epsilons(std::uint64_t q, std::uint64_t n) { return epsilons_from_residue(q % 9, n); }

/// (2q - 3(e1+e2) - 10 - 2 s_k) / 9 for q = p^k.
inline BigInt closed_count_r3(std::uint64_t p, std::uint64_t k, std::uint64_t n) {
  if (!nt::is_prime(p)) throw Error(ErrorCode::kNonPrime, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  if (nt::pow_mod(p, k, 3) != 1) throw Error(ErrorCode::kBadFieldForCubic, "q is not 1 mod 3");
  if (!nt::coprime_to_cubic_cofactor(n, p, k)) {
    throw Error(ErrorCode::kGcdViolation, "gcd(n, (q-1)/3) != 1");
  }
  const Epsilons eps = epsilons_from_residue(nt::pow_mod(p, k, 9), n);
  const BigInt numerator = 2 * nt::big_pow(p, k) - 3 * (eps.e1 + eps.e2) - 10 - 2 * pi_trace(p, k);
  if (numerator % 9 != 0) {
    throw Error(ErrorCode::kDivisibilityViolation, "numerator not divisible by 9");
  }
  return numerator / 9;
}

/// M_r = r^(r+1) - 2 r^r - r^(r-1) + 2.
inline std::int64_t masuda_zieve_m(unsigned r) {
  const auto ir = static_cast<std::int64_t>(r);
  std::int64_t rr1 = 1;
  for (unsigned i = 1; i < r; ++i) rr1 *= ir;
  return rr1 * ir * ir - 2 * rr1 * ir - rr1 + 2;
}

/// (r!/r^r)(q + 1 - M_r sqrt(q) - (r+1) r^(r-1)) and (r!/r^r)(q + 1 + M_r sqrt(q)).
inline SurdInterval masuda_zieve_bounds(std::uint64_t q, unsigned r) {
  if (r < 2 || r > 12) throw Error(ErrorCode::kInvalidArgument, "r must be in [2, 12]");
  if ((q - 1) % r != 0) throw Error(ErrorCode::kInvalidArgument, "r must divide q-1");
  std::int64_t fact = 1, rr = 1, rr1 = 1;
  for (unsigned i = 1; i <= r; ++i) {
    fact *= i;
    rr *= r;
    if (i < r) rr1 *= r;
  }
  const auto iq = static_cast<std::int64_t>(q);
  const std::int64_t m = masuda_zieve_m(r);
  std::uint64_t radicand = q;
  std::int64_t coeff_scale = 1;
  // Pull exact square roots out of the surd.
  if (const std::uint64_t root = nt::isqrt(q); root * root == q) {
    radicand = 1;
    coeff_scale = static_cast<std::int64_t>(root);
  }
  const std::int64_t lower_rat = (iq + 1 - static_cast<std::int64_t>(r + 1) * rr1) * fact;
  const std::int64_t upper_rat = (iq + 1) * fact;
  const std::int64_t surd = m * coeff_scale * fact;
  return {{Rational::make(lower_rat, rr), Rational::make(-surd, rr), radicand},
          {Rational::make(upper_rat, rr), Rational::make(surd, rr), radicand}};
}

/// Integer range implied by the bounds, with the lower end clamped at zero.
inline IntInterval masuda_zieve_integer_range(std::uint64_t q, unsigned r) {
  const SurdInterval b = masuda_zieve_bounds(q, r);
  return {std::max<std::int64_t>(0, b.lower.ceil()), b.upper.floor()};
}

/// ceil((2q - 4 sqrt(q) - 16)/9) and floor((2q + 4 sqrt(q) - 7)/9).
inline IntInterval corollary_bounds_r3(std::uint64_t q) {
  if (q % 3 != 1) throw Error(ErrorCode::kBadFieldForCubic, "q is not 1 mod 3");
  const auto iq = static_cast<std::int64_t>(q);
  const QuadraticSurd lower{Rational::make(2 * iq - 16, 9), Rational::make(-4, 9), q};
  const QuadraticSurd upper{Rational::make(2 * iq - 7, 9), Rational::make(4, 9), q};
  return {lower.ceil(), upper.floor()};
}

/// Everything known about one (q, n, r) cell.
struct CountReport {
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  unsigned k = 0;
  std::uint64_t n = 0;
  unsigned r = 0;
  std::optional<Epsilons> eps;
  std::optional<BigInt> s_k;
  BigInt closed_count;
  std::optional<std::int64_t> criterion_count;
  std::optional<std::int64_t> brute_count;
  SurdInterval mz;
  std::optional<IntInterval> cor;
  std::vector<std::uint64_t> a_values;
};

/// Closed-form count plus bounds; criterion enumeration fills a_values, brute force is optional.
inline CountReport build_count_report(const FieldSpec& spec, std::uint64_t n, unsigned r,
                                      bool with_criterion, bool with_brute,
                                      const EnumerationGuard& guard = {}) {
  CountReport rep;
  rep.q = spec.q();
  rep.p = spec.p();
  rep.k = spec.k();
  rep.n = n;
  rep.r = r;
  if (r == 2) {
    rep.closed_count = closed_count_r2(spec.q(), n);
  } else if (r == 3) {
    rep.eps = epsilons(spec.q(), n);
    rep.s_k = pi_trace(spec.p(), spec.k());
    rep.closed_count = closed_count_r3(spec.p(), spec.k(), n);
    rep.cor = corollary_bounds_r3(spec.q());
  } else {
    throw Error(ErrorCode::kInvalidArgument, "r must be 2 or 3");
  }
  rep.mz = masuda_zieve_bounds(spec.q(), r);
  if (with_criterion) {
    const auto values = enumerate_perm_binomials(spec, n, r, Method::kCriterion, guard);
    rep.criterion_count = static_cast<std::int64_t>(values.size());
    for (FieldElement a : values) rep.a_values.push_back(a.code());
  }
  if (with_brute) {
    rep.brute_count =
        static_cast<std::int64_t>(enumerate_perm_binomials(spec, n, r, Method::kBruteForce, guard).size());
  }
  return rep;
}

}  // namespace permbinom
