#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/math/constants/constants.hpp>

#include "permbinom/closed_form.hpp"
#include "permbinom/curves.hpp"
#include "permbinom/number_theory.hpp"

namespace permbinom {

using HighFloat = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<120>>;

/// Signed decimal with a fixed number of fractional digits, truncated toward zero.
struct FixedDecimal {
  BigInt scaled;
  unsigned digits = 0;

  std::string str() const {
    const bool negative = scaled < 0;
    std::string body = (negative ? BigInt(-scaled) : scaled).str();
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
    return (negative ? "-" : "") + body;
  }

  HighFloat to_high() const {
    return HighFloat(scaled) / boost::multiprecision::pow(HighFloat(10), static_cast<int>(digits));
  }

  double to_double() const { return static_cast<double>(to_high()); }

  /// True when the exact value is certainly above threshold (a decimal string like "1.9999").
  bool certainly_greater(const std::string& threshold) const {
    return scaled - 1 >= parse(threshold, digits);
  }

  /// True when the exact value is certainly below threshold.
  bool certainly_less(const std::string& threshold) const {
    return scaled + 1 <= parse(threshold, digits);
  }

  /// Decimal string scaled by 10^digits; extra fractional digits are rejected.
  static BigInt parse(const std::string& text, unsigned digits) {
    const bool negative = !text.empty() && text.front() == '-';
    const std::string body = negative ? text.substr(1) : text;
    const auto dot = body.find('.');
    const std::string int_part = body.substr(0, dot);
    std::string frac = dot == std::string::npos ? "" : body.substr(dot + 1);
    if (frac.size() > digits) {
      throw Error(ErrorCode::kInvalidArgument, "threshold has more digits than the fixed-point value");
    }
    frac.append(digits - frac.size(), '0');
    const BigInt value = parse_digits(int_part) * boost::multiprecision::pow(BigInt(10), digits) +
                         parse_digits(frac);
    return negative ? BigInt(-value) : value;
  }

 private:
  static BigInt parse_digits(const std::string& digits) {
    BigInt v = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') throw Error(ErrorCode::kInvalidArgument, "bad decimal '" + digits + "'");
      v = v * 10 + (c - '0');
    }
    return v;
  }
};

struct Convergent {
  std::string source;  // "theta/2pi" or "theta/pi"
  BigInt numerator;    // m_l
  BigInt denominator;  // n_l
};

struct SharpnessFinding {
  std::uint64_t k = 0;
  Epsilons eps;
  /// (p^k - 9/2 T_k) / p^(k/2) = ((3(e1+e2)+10)/2 + s_k) / p^(k/2)
  FixedDecimal deviation;
  bool gcd_ok = false;
  /// |deviation - 2cos(k theta)| within the correction bound plus truncation.
  bool cos_check = false;
};

struct SharpnessProbe {
  std::uint64_t p = 0;
  std::int64_t kappa = 0;
  HighFloat theta;
  std::vector<Convergent> convergents;
  std::vector<SharpnessFinding> findings;
};

struct SharpnessOptions {
  unsigned digits = 40;
  std::uint64_t max_k = 10000;
};

/// Continued-fraction convergents of x >= 0, at most depth of them.
inline std::vector<std::pair<BigInt, BigInt>> convergents_of(HighFloat x, unsigned depth) {
  std::vector<std::pair<BigInt, BigInt>> out;
  // h_{-2} = 0, h_{-1} = 1, k_{-2} = 1, k_{-1} = 0
  BigInt h_prev = 0, h = 1, k_prev = 1, k = 0;
  const HighFloat eps = boost::multiprecision::pow(HighFloat(10), -100);
  for (unsigned i = 0; i < depth; ++i) {
    const HighFloat a_f = boost::multiprecision::floor(x);
    const BigInt a = a_f.convert_to<BigInt>();
    BigInt h_next = a * h + h_prev;
    BigInt k_next = a * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    out.emplace_back(h, k);
    const HighFloat frac = x - a_f;
    if (frac < eps) break;
    x = 1 / frac;
  }
  return out;
}

/// d_k = (c + 2 s_k) / (2 p^(k/2)) with c = 3(e1+e2)+10, truncated to `digits` places.
inline FixedDecimal deviation_for(std::uint64_t p, std::uint64_t k, const Epsilons& eps,
                                  unsigned digits) {
  const BigInt numerator = BigInt(3 * (eps.e1 + eps.e2) + 10) + 2 * pi_trace(p, k);
  const BigInt ten_pow = boost::multiprecision::pow(BigInt(10), digits);
  const BigInt radicand = numerator * numerator * ten_pow * ten_pow / (4 * nt::big_pow(p, k));
  BigInt magnitude = nt::isqrt(radicand);
  return {numerator < 0 ? BigInt(-magnitude) : magnitude, digits};
}

inline SharpnessFinding make_finding(std::uint64_t p, std::uint64_t k, std::uint64_t n,
                                     const HighFloat& theta, const SharpnessOptions& opts) {
  SharpnessFinding f;
  f.k = k;
  f.eps = epsilons_from_residue(nt::pow_mod(p, k, 9), n);
  f.deviation = deviation_for(p, k, f.eps, opts.digits);
  f.gcd_ok = nt::coprime_to_cubic_cofactor(n, p, k);
  const HighFloat cos_term = 2 * boost::multiprecision::cos(HighFloat(k) * theta);
  const HighFloat correction = HighFloat(std::abs(3 * (f.eps.e1 + f.eps.e2) + 10)) / 2 /
                               boost::multiprecision::pow(boost::multiprecision::sqrt(HighFloat(p)),
                                                          static_cast<int>(k));
  const HighFloat truncation = boost::multiprecision::pow(HighFloat(10), -static_cast<int>(opts.digits));
  const HighFloat gap = boost::multiprecision::abs(f.deviation.to_high() - cos_term);
  f.cos_check = gap <= correction + truncation;
  return f;
}

/// Exhibits k with d_k close to +2 or -2 via convergents of theta/(2 pi) and theta/pi.
///
/// For p = 2 mod 3, pi_p = i sqrt(p) and the extremes alternate at even k, so those k are
/// reported directly instead.
inline SharpnessProbe sharpness_probe(std::uint64_t p, std::uint64_t n, unsigned depth,
                                      const SharpnessOptions& opts = {}) {
  const KappaRecord kap = compute_kappa(p);
  SharpnessProbe probe;
  probe.p = p;
  probe.kappa = kap.kappa;
  const HighFloat half_kappa = HighFloat(kap.kappa) / 2;
  probe.theta = boost::multiprecision::atan2(
      boost::multiprecision::sqrt(HighFloat(p) - half_kappa * half_kappa), -half_kappa);

  std::set<std::uint64_t> ks;
  if (p % 3 == 2) {
    for (std::uint64_t k = 2; k <= 2 * static_cast<std::uint64_t>(depth) && k <= opts.max_k; k += 2) {
      ks.insert(k);
    }
  } else {
    const HighFloat pi = boost::math::constants::pi<HighFloat>();
    for (const auto& [source, x] :
         {std::pair<std::string, HighFloat>{"theta/2pi", probe.theta / (2 * pi)},
          std::pair<std::string, HighFloat>{"theta/pi", probe.theta / pi}}) {
      for (auto& [m, d] : convergents_of(x, depth)) {
        probe.convergents.push_back({source, m, d});
        if (d >= 1 && d <= opts.max_k) ks.insert(static_cast<std::uint64_t>(d));
      }
    }
  }
  for (std::uint64_t k : ks) probe.findings.push_back(make_finding(p, k, n, probe.theta, opts));
  return probe;
}

}  // namespace permbinom
