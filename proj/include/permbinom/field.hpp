#pragma once

#include <array>
#include <compare>
#include <concepts>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "permbinom/error.hpp"
#include "permbinom/number_theory.hpp"

namespace permbinom {

/// An element of F_{p^k} in polynomial-basis coordinates.
///
/// The element is stored by its canonical integer encoding c0 + c1*p + ... + c_{k-1}*p^{k-1},
/// so equality of encodings is equality of coefficient vectors and ascending encodings
/// are exactly the enumeration order (constant coefficient varying fastest).
class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint64_t code) : code_(code) {}

  constexpr std::uint64_t code() const { return code_; }
  constexpr bool is_zero() const { return code_ == 0; }

  constexpr auto operator<=>(const FieldElement&) const = default;

 private:
  std::uint64_t code_ = 0;
};

inline constexpr std::uint64_t kDefaultEnumerationLimit = std::uint64_t{1} << 20;

/// Enumeration ceiling, overridable through PERMBINOM_GUARD.
inline std::uint64_t enumeration_limit() {
  if (const char* env = std::getenv("PERMBINOM_GUARD"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && value > 0) return value;
  }
  return kDefaultEnumerationLimit;
}

/// Refuses enumeration of fields above the configured size unless forced.
struct EnumerationGuard {
  std::uint64_t limit = enumeration_limit();
  bool force = false;

  void check(std::uint64_t q) const {
    if (!force && q > limit) {
      throw Error(ErrorCode::kGuardExceeded,
                  "q=" + std::to_string(q) + " exceeds enumeration guard " + std::to_string(limit));
    }
  }
};

/// Dense polynomial over F_p, constant term first.
using PrimePoly = std::vector<std::uint64_t>;

namespace detail {

inline void trim(PrimePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline PrimePoly poly_mul_mod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& m,
                              std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + nt::mul_mod(a[i], b[j], p)) % p;
    }
  }
  // m is monic.
  const std::size_t deg = m.size() - 1;
  for (std::size_t i = prod.size(); i-- > deg;) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) {
      const std::uint64_t sub = nt::mul_mod(c, m[j], p);
      prod[i - deg + j] = (prod[i - deg + j] + p - sub) % p;
    }
  }
  prod.resize(std::min(prod.size(), deg));
  trim(prod);
  return prod;
}

inline PrimePoly poly_pow_mod(PrimePoly base, BigInt exp, const PrimePoly& m, std::uint64_t p) {
  PrimePoly result{1};
  while (exp > 0) {
    if ((exp & 1) != 0) result = poly_mul_mod(result, base, m, p);
    base = poly_mul_mod(base, base, m, p);
    exp >>= 1;
  }
  return result;
}

inline PrimePoly poly_rem(PrimePoly a, const PrimePoly& b, std::uint64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = nt::pow_mod(b.back(), p - 2, p);
  while (!a.empty() && a.size() - 1 >= db) {
    const std::uint64_t c = nt::mul_mod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) {
      a[shift + j] = (a[shift + j] + p - nt::mul_mod(c, b[j], p)) % p;
    }
    trim(a);
  }
  return a;
}

inline PrimePoly poly_gcd(PrimePoly a, PrimePoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PrimePoly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace detail

/// True iff the monic polynomial f of degree k >= 1 is irreducible over F_p.
///
/// Uses gcd(x^{p^i} - x, f) = 1 for 1 <= i <= k/2.
inline bool is_irreducible(const PrimePoly& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  if (f[0] == 0) return false;
  PrimePoly xp{0, 1};
  for (std::size_t i = 1; i <= k / 2; ++i) {
    xp = detail::poly_pow_mod(xp, BigInt(p), f, p);
    PrimePoly diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    detail::trim(diff);
    if (diff.empty()) return false;
    if (detail::poly_gcd(f, diff, p).size() != 1) return false;
  }
  return true;
}

/// A concrete finite field F_{p^k}; immutable after construction.
class FieldSpec {
 public:
  static constexpr std::size_t kMaxDegree = 62;

  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint64_t q() const { return q_; }
  const PrimePoly& modulus() const { return modulus_; }
  FieldElement alpha() const { return alpha_; }
  /// Prime factors of q - 1, ascending.
  std::span<const std::uint64_t> group_order_primes() const { return group_primes_; }

  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return FieldElement{1}; }

  /// Image of an integer under Z -> F_p -> F_q.
  FieldElement from_int(std::int64_t v) const {
    return FieldElement{static_cast<std::uint64_t>(nt::mod_floor(v % static_cast<std::int64_t>(p_),
                                                                 static_cast<std::int64_t>(p_)))};
  }

  /// Element with the given canonical encoding; throws if out of range.
  FieldElement element(std::uint64_t code) const {
    if (code >= q_) {
      throw Error(ErrorCode::kInvalidArgument,
                  "encoding " + std::to_string(code) + " outside F_" + std::to_string(q_));
    }
    return FieldElement{code};
  }

  FieldElement from_coefficients(std::span<const std::uint64_t> coeffs) const {
    if (coeffs.size() > k_) throw Error(ErrorCode::kDegreeMismatch, "too many coefficients");
    std::uint64_t code = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) code = code * p_ + coeffs[i] % p_;
    return FieldElement{code};
  }

  std::vector<std::uint64_t> coefficients(FieldElement x) const {
    std::vector<std::uint64_t> out(k_, 0);
    std::uint64_t code = x.code();
    for (unsigned i = 0; i < k_; ++i) {
      out[i] = code % p_;
      code /= p_;
    }
    return out;
  }

  FieldElement add(FieldElement a, FieldElement b) const {
    if (k_ == 1) return FieldElement{(a.code() + b.code()) % p_};
    std::uint64_t x = a.code(), y = b.code(), code = 0;
    for (unsigned i = 0; i < k_; ++i) {
      code += ((x % p_ + y % p_) % p_) * pow_p_[i];
      x /= p_;
      y /= p_;
    }
    return FieldElement{code};
  }

  FieldElement neg(FieldElement a) const {
    if (k_ == 1) return FieldElement{(p_ - a.code()) % p_};
    std::uint64_t x = a.code(), code = 0;
    for (unsigned i = 0; i < k_; ++i) {
      code += ((p_ - x % p_) % p_) * pow_p_[i];
      x /= p_;
    }
    return FieldElement{code};
  }

  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

  FieldElement mul(FieldElement a, FieldElement b) const {
    if (k_ == 1) return FieldElement{nt::mul_mod(a.code(), b.code(), p_)};
    if (a.is_zero() || b.is_zero()) return zero();
    std::array<std::uint64_t, kMaxDegree> x{}, y{};
    std::array<std::uint64_t, 2 * kMaxDegree> prod{};
    decode(a, x);
    decode(b, y);
    for (unsigned i = 0; i < k_; ++i) {
      if (x[i] == 0) continue;
      for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + nt::mul_mod(x[i], y[j], p_)) % p_;
    }
    for (unsigned i = 2 * k_ - 2; i >= k_; --i) {
      const std::uint64_t c = prod[i];
      if (c == 0) continue;
      for (unsigned j = 0; j < k_; ++j) {
        prod[i - k_ + j] = (prod[i - k_ + j] + p_ - nt::mul_mod(c, modulus_[j], p_)) % p_;
      }
    }
    std::uint64_t code = 0;
    for (unsigned i = k_; i-- > 0;) code = code * p_ + prod[i];
    return FieldElement{code};
  }

  template <std::unsigned_integral U>
  FieldElement pow(FieldElement base, U e) const {
    std::uint64_t exp = e;
    FieldElement result = one();
    while (exp > 0) {
      if (exp & 1U) result = mul(result, base);
      base = mul(base, base);
      exp >>= 1U;
    }
    return result;
  }

  /// Signed exponents go through the inverse; 0^0 = 1.
  template <std::signed_integral I>
  FieldElement pow(FieldElement base, I e) const {
    const auto exp = static_cast<std::int64_t>(e);
    if (exp >= 0) return pow(base, static_cast<std::uint64_t>(exp));
    const std::uint64_t magnitude = static_cast<std::uint64_t>(-(exp + 1)) + 1;
    return pow(inv(base), magnitude);
  }

  FieldElement inv(FieldElement a) const {
    if (a.is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
    return pow(a, q_ - 2);
  }

  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  /// Multiplicative order, by stripping prime factors of q - 1.
  std::uint64_t order_of(FieldElement x) const {
    if (x.is_zero()) throw Error(ErrorCode::kZeroElement, "order of zero");
    std::uint64_t order = q_ - 1;
    for (std::uint64_t prime : group_primes_) {
      while (order % prime == 0 && pow(x, order / prime) == one()) order /= prime;
    }
    return order;
  }

  /// alpha^((q-1)/d), an element of order exactly d (d | q-1).
  FieldElement root_of_unity(std::uint64_t d) const {
    if (d == 0 || (q_ - 1) % d != 0) {
      throw Error(ErrorCode::kInvalidArgument, std::to_string(d) + " does not divide q-1");
    }
    return pow(alpha_, (q_ - 1) / d);
  }

  /// Human-readable form: "5" for prime fields, "x^2+2x+1" for extensions.
  std::string format(FieldElement x) const {
    if (k_ == 1) return std::to_string(x.code());
    if (x.is_zero()) return "0";
    const auto c = coefficients(x);
    std::string out;
    for (unsigned i = k_; i-- > 0;) {
      if (c[i] == 0) continue;
      if (!out.empty()) out += "+";
      if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
      if (i >= 1) out += "x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

  friend FieldSpec make_field(std::uint64_t p, unsigned k, std::optional<PrimePoly> modulus);

 private:
  FieldSpec() = default;

  void decode(FieldElement a, std::array<std::uint64_t, kMaxDegree>& out) const {
    std::uint64_t code = a.code();
    for (unsigned i = 0; i < k_; ++i) {
      out[i] = code % p_;
      code /= p_;
    }
  }

  std::uint64_t p_ = 2;
  unsigned k_ = 1;
  std::uint64_t q_ = 2;
  PrimePoly modulus_;
  FieldElement alpha_;
  std::vector<std::uint64_t> pow_p_;
  std::vector<std::uint64_t> group_primes_;
};

/// Builds F_{p^k}. Without a modulus, the smallest monic irreducible in ascending
/// encoding order of its lower coefficients (constant fastest) is chosen. The primitive
/// element is the first element in enumeration order of order q - 1.
inline FieldSpec make_field(std::uint64_t p, unsigned k, std::optional<PrimePoly> modulus = std::nullopt) {
  if (!nt::is_prime(p)) throw Error(ErrorCode::kNonPrime, std::to_string(p) + " is not prime");
  if (k < 1 || k > FieldSpec::kMaxDegree) {
    throw Error(ErrorCode::kDegreeMismatch, "degree must be in [1, 62]");
  }
  if (p >= (std::uint64_t{1} << 32)) throw Error(ErrorCode::kFieldTooLarge, "p must be below 2^32");
  unsigned __int128 q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q >= (static_cast<unsigned __int128>(1) << 62)) {
      throw Error(ErrorCode::kFieldTooLarge, "q must be below 2^62");
    }
  }

  FieldSpec spec;
  spec.p_ = p;
  spec.k_ = k;
  spec.q_ = static_cast<std::uint64_t>(q);
  spec.pow_p_.resize(k);
  std::uint64_t power = 1;
  for (unsigned i = 0; i < k; ++i) {
    spec.pow_p_[i] = power;
    power *= p;
  }

  if (modulus) {
    PrimePoly m = *modulus;
    if (m.size() != k + 1) {
      throw Error(ErrorCode::kDegreeMismatch, "modulus degree must equal " + std::to_string(k));
    }
    for (auto& c : m) c %= p;
    if (m.back() != 1) throw Error(ErrorCode::kDegreeMismatch, "modulus must be monic");
    if (!is_irreducible(m, p)) throw Error(ErrorCode::kReducibleModulus, "modulus is reducible");
    spec.modulus_ = std::move(m);
  } else if (k == 1) {
    spec.modulus_ = {0, 1};
  } else {
    const std::uint64_t lower_count = spec.q_;
    for (std::uint64_t code = 0; code < lower_count; ++code) {
      PrimePoly candidate(k + 1, 0);
      std::uint64_t c = code;
      for (unsigned i = 0; i < k; ++i) {
        candidate[i] = c % p;
        c /= p;
      }
      candidate[k] = 1;
      if (is_irreducible(candidate, p)) {
        spec.modulus_ = std::move(candidate);
        break;
      }
    }
  }

  spec.group_primes_ = nt::prime_divisors(spec.q_ - 1);
  if (spec.q_ == 2) {
    spec.alpha_ = spec.one();
  } else {
    for (std::uint64_t code = 1; code < spec.q_; ++code) {
      if (spec.order_of(FieldElement{code}) == spec.q_ - 1) {
        spec.alpha_ = FieldElement{code};
        break;
      }
    }
  }
  return spec;
}

/// All q elements in enumeration order (ascending canonical encoding).
inline std::vector<FieldElement> enumerate_elements(const FieldSpec& spec,
                                                    const EnumerationGuard& guard = {}) {
  guard.check(spec.q());
  std::vector<FieldElement> out;
  out.reserve(spec.q());
  for (std::uint64_t code = 0; code < spec.q(); ++code) out.emplace_back(code);
  return out;
}

/// Parses "p" or "p^k" (e.g. "73", "2^4"); a bare prime power like "9" also works.
inline std::pair<std::uint64_t, unsigned> parse_field_string(const std::string& text) {
  const auto caret = text.find('^');
  try {
    std::size_t used = 0;
    const std::uint64_t p = std::stoull(text.substr(0, caret), &used);
    if (used != (caret == std::string::npos ? text.size() : caret)) throw std::invalid_argument(text);
    if (caret == std::string::npos) {
      // a bare prime power such as "9" is read as 3^2
      if (const auto pp = nt::as_prime_power(p); pp && !nt::is_prime(p)) return {pp->prime, pp->exponent};
      return {p, 1};
    }
    const std::string tail = text.substr(caret + 1);
    const auto k = static_cast<unsigned>(std::stoul(tail, &used));
    if (used != tail.size()) throw std::invalid_argument(text);
    return {p, k};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kInvalidArgument, "bad field string '" + text + "'");
  }
}

}  // namespace permbinom
