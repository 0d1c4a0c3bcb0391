#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permbinom/characters.hpp"
#include "permbinom/error.hpp"
#include "permbinom/field.hpp"
#include "permbinom/number_theory.hpp"

namespace permbinom {

/// y^2 = x^3 + A x + B over the ambient field. Singular curves are allowed.
struct CurveSpec {
  FieldElement A;
  FieldElement B;
};

/// kappa_p together with the data that pins it down.
struct KappaRecord {
  std::uint64_t p = 0;
  std::int64_t kappa = 0;
  std::uint64_t residue = 0;
  /// |E(F_p)| for y^2 = x^3 + 1/4.
  std::int64_t curve_count = 0;
};

namespace detail {

inline void require_odd_prime(std::uint64_t p) {
  if (!nt::is_prime(p)) throw Error(ErrorCode::kNonPrime, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(ErrorCode::kEvenPrime, "p must be odd");
}

/// binom(n, k) mod p for 0 <= k <= n < p.
inline std::uint64_t binomial_mod_prime(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  if (k > n) return 0;
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num = nt::mul_mod(num, (n - i) % p, p);
    den = nt::mul_mod(den, (i + 1) % p, p);
  }
  return nt::mul_mod(num, nt::pow_mod(den, p - 2, p), p);
}

}  // namespace detail

/// Projective point count of y^2 = x^3 + Ax + B over any odd-characteristic field,
/// as 1 + sum over x of (1 + chi(x^3 + Ax + B)).
inline std::int64_t count_points(const FieldSpec& spec, const CurveSpec& curve,
                                 const EnumerationGuard& guard = {}) {
  if (spec.p() == 2) {
    throw Error(ErrorCode::kEvenCharacteristic, "characteristic-2 curves are not counted here");
  }
  guard.check(spec.q());
  std::int64_t count = 1;
  for (std::uint64_t code = 0; code < spec.q(); ++code) {
    const FieldElement x{code};
    const FieldElement rhs =
        spec.add(spec.mul(spec.add(spec.mul(x, x), curve.A), x), curve.B);
    count += 1 + quadratic_char(spec, rhs).value;
  }
  return count;
}

inline std::int64_t count_points_prime(std::uint64_t p, std::uint64_t A, std::uint64_t B) {
  detail::require_odd_prime(p);
  const FieldSpec spec = make_field(p, 1);
  return count_points(spec, {spec.from_int(static_cast<std::int64_t>(A % p)),
                             spec.from_int(static_cast<std::int64_t>(B % p))});
}

inline std::int64_t count_points_extension(const FieldSpec& spec, FieldElement A, FieldElement B,
                                           const EnumerationGuard& guard = {}) {
  return count_points(spec, {A, B}, guard);
}

/// Residue mod p of |E(F_p)| - p - 1 for y^2 = x^3 + Ax + B, from the binomial-coefficient sum
///   -sum_{l} binom((p-1)/2, 2l) binom(2l, (p-1-2l)/2) B^((p-1)/2-2l) A^(3l-(p-1)/2),
/// l from ceil((p-1)/6) to floor((p-1)/4), with 0^0 = 1.
inline std::uint64_t point_count_residue(std::uint64_t p, std::uint64_t A, std::uint64_t B) {
  detail::require_odd_prime(p);
  if (p == 3) throw Error(ErrorCode::kSmallPrime, "p must be at least 5");
  A %= p;
  B %= p;
  const std::uint64_t half = (p - 1) / 2;
  const std::uint64_t lo = (p - 1 + 5) / 6;
  const std::uint64_t hi = (p - 1) / 4;
  std::uint64_t sum = 0;
  for (std::uint64_t l = lo; l <= hi; ++l) {
    std::uint64_t term = detail::binomial_mod_prime(half, 2 * l, p);
    term = nt::mul_mod(term, detail::binomial_mod_prime(2 * l, (p - 1 - 2 * l) / 2, p), p);
    term = nt::mul_mod(term, nt::pow_mod(B, half - 2 * l, p), p);
    term = nt::mul_mod(term, nt::pow_mod(A, 3 * l - half, p), p);
    sum = (sum + term) % p;
  }
  return (p - sum) % p;
}

/// Frobenius data of y^2 = x^3 + 1/4 over F_p; |E(F_p)| = p + 1 + kappa.
inline KappaRecord compute_kappa(std::uint64_t p) {
  if (!nt::is_prime(p)) throw Error(ErrorCode::kNonPrime, std::to_string(p) + " is not prime");
  if (p == 3) throw Error(ErrorCode::kUnsupportedPrime, "kappa_3 is undefined");
  KappaRecord rec;
  rec.p = p;
  if (p == 2) {
    // Characteristic 2 uses the model x^2 + x = y^3 + 1, which has 3 points over F_2.
    rec.curve_count = 3;
    return rec;
  }
  const std::uint64_t inv4 = nt::pow_mod(4, p - 2, p);
  if (p % 3 == 2) {
    rec.kappa = 0;
    rec.residue = 0;
  } else {
    const std::uint64_t binom = detail::binomial_mod_prime((p - 1) / 2, (p - 1) / 3, p);
    rec.residue = (p - nt::mul_mod(binom, nt::pow_mod(inv4, (p - 1) / 6, p), p)) % p;
    if (p == 7) {
      rec.kappa = 1;
    } else if (p == 13) {
      rec.kappa = -5;
    } else {
      const auto bound = static_cast<std::int64_t>(nt::isqrt(4 * p));
      const auto ip = static_cast<std::int64_t>(p);
      std::int64_t candidate = static_cast<std::int64_t>(rec.residue);
      if (candidate > bound) candidate -= ip;
      if (candidate < -bound || candidate > bound) {
        throw Error(ErrorCode::kCrossCheckFailed,
                    "no integer in the Hasse window matches the residue for p=" + std::to_string(p));
      }
      rec.kappa = candidate;
    }
  }
  rec.curve_count = count_points_prime(p, 0, inv4);
  if (rec.curve_count != static_cast<std::int64_t>(p) + 1 + rec.kappa) {
    throw Error(ErrorCode::kCrossCheckFailed,
                "point count " + std::to_string(rec.curve_count) + " disagrees with kappa=" +
                    std::to_string(rec.kappa) + " for p=" + std::to_string(p));
  }
  return rec;
}

/// s_0, ..., s_{count-1} with s_j = pi_p^j + conj(pi_p)^j.
inline std::vector<BigInt> trace_sequence(std::uint64_t p, std::size_t count) {
  const BigInt kappa = compute_kappa(p).kappa;
  std::vector<BigInt> s;
  s.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    if (j == 0) {
      s.emplace_back(2);
    } else if (j == 1) {
      s.emplace_back(-kappa);
    } else {
      s.push_back(-kappa * s[j - 1] - BigInt(p) * s[j - 2]);
    }
  }
  return s;
}

namespace detail {

struct Mat2 {
  BigInt a, b, c, d;
};

inline Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

}  // namespace detail

/// s_j by powering the companion matrix [[-kappa, -p], [1, 0]].
inline BigInt pi_trace_matrix(std::uint64_t p, std::uint64_t j) {
  const BigInt kappa = compute_kappa(p).kappa;
  if (j == 0) return 2;
  if (j == 1) return -kappa;
  detail::Mat2 result{1, 0, 0, 1};
  detail::Mat2 base{-kappa, -BigInt(p), 1, 0};
  std::uint64_t e = j - 1;
  while (e > 0) {
    if (e & 1U) result = detail::mat_mul(result, base);
    base = detail::mat_mul(base, base);
    e >>= 1U;
  }
  // [s_j, s_{j-1}]^T = M^(j-1) [s_1, s_0]^T
  return result.a * (-kappa) + result.b * 2;
}

inline constexpr std::uint64_t kTraceIterationLimit = 64;

inline BigInt pi_trace(std::uint64_t p, std::uint64_t j) {
  if (j > kTraceIterationLimit) return pi_trace_matrix(p, j);
  return trace_sequence(p, static_cast<std::size_t>(j) + 1).back();
}

/// Sum over a in F_{4^k} minus {1, xi, xi^2} of eta(g) + eta^2(g), g = (a^2+a+1)/(a^2+1).
inline std::int64_t char2_cubic_sum(unsigned k, const EnumerationGuard& guard = {}) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  const FieldSpec spec = make_field(2, 2 * k);
  guard.check(spec.q());
  const CubicCharacter eta(spec);
  std::int64_t total = 0;
  for (std::uint64_t code = 0; code < spec.q(); ++code) {
    const FieldElement a{code};
    if (a == spec.one() || a == eta.xi() || a == eta.xi_squared()) continue;
    const FieldElement a2 = spec.mul(a, a);
    const FieldElement num = spec.add(spec.add(a2, a), spec.one());
    const FieldElement den = spec.add(a2, spec.one());
    total += eta.eta_plus_eta_squared(spec.div(num, den));
  }
  return total;
}

/// Odd-characteristic analogue over Lambda = F_q minus {-1, -xi, -xi^2}:
/// sum of eta(g) + eta^2(g), g = (a^2-a+1)/(a^2+2a+1).
inline std::int64_t odd_cubic_sum(const FieldSpec& spec, const EnumerationGuard& guard = {}) {
  guard.check(spec.q());
  const CubicCharacter eta(spec);
  std::int64_t total = 0;
  for (std::uint64_t code = 0; code < spec.q(); ++code) {
    const FieldElement a{code};
    const FieldElement u0 = spec.add(spec.one(), a);
    if (u0.is_zero() || spec.add(eta.xi(), a).is_zero() || spec.add(eta.xi_squared(), a).is_zero()) {
      continue;
    }
    const FieldElement a2 = spec.mul(a, a);
    const FieldElement num = spec.add(spec.sub(a2, a), spec.one());
    total += eta.eta_plus_eta_squared(spec.div(num, spec.mul(u0, u0)));
  }
  return total;
}

}  // namespace permbinom
