#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "permbinom/characters.hpp"
#include "permbinom/error.hpp"
#include "permbinom/field.hpp"
#include "permbinom/polynomial.hpp"

namespace permbinom {

/// The binomial x^n (x^((q-1)/r) + a).
struct BinomialCase {
  std::uint64_t n = 1;
  unsigned r = 2;
  FieldElement a;

  void validate(const FieldSpec& spec) const {
    if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
    if (r < 2 || (spec.q() - 1) % r != 0) {
      throw Error(r == 3 ? ErrorCode::kBadFieldForCubic : ErrorCode::kInvalidArgument,
                  "r=" + std::to_string(r) + " does not divide q-1");
    }
  }
};

/// f(x) = x^r_low * h(x^((q-1)/m)) + b with h(0) != 0 and m minimal.
struct IndexForm {
  std::uint64_t r_low = 0;
  SparsePolynomial h;
  std::uint64_t m = 1;
  FieldElement b;
};

namespace detail {

inline std::uint64_t index_step(const FieldSpec& spec, const SparsePolynomial& f) {
  // gcd of q-1 with all exponent gaps above the lowest non-constant term
  const auto& terms = f.terms();
  std::size_t first = (!terms.empty() && terms.front().exponent == 0) ? 1 : 0;
  std::uint64_t step = spec.q() - 1;
  for (std::size_t i = first + 1; i < terms.size(); ++i) {
    step = std::gcd(step, terms[i].exponent - terms[first].exponent);
  }
  return step;
}

}  // namespace detail

inline IndexForm compute_index_form(const FieldSpec& spec, const SparsePolynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "index of the zero polynomial");
  if (f.degree() >= spec.q()) {
    throw Error(ErrorCode::kDegreeMismatch, "degree must be below q; reduce the polynomial first");
  }
  const auto& terms = f.terms();
  IndexForm form;
  form.b = f.coefficient(0);
  const std::size_t first = terms.front().exponent == 0 ? 1 : 0;
  if (first == terms.size()) {
    throw Error(ErrorCode::kZeroPolynomial, "constant polynomial has no index");
  }
  form.r_low = terms[first].exponent;
  const std::uint64_t step = detail::index_step(spec, f);
  form.m = (spec.q() - 1) / step;
  std::vector<Term> h_terms;
  for (std::size_t i = first; i < terms.size(); ++i) {
    h_terms.push_back({(terms[i].exponent - form.r_low) / step, terms[i].coeff});
  }
  form.h = SparsePolynomial(spec, std::move(h_terms));
  return form;
}

/// x^r_low h(x^((q-1)/m)) + b.
inline SparsePolynomial recompose(const FieldSpec& spec, const IndexForm& form) {
  const std::uint64_t step = (spec.q() - 1) / form.m;
  std::vector<Term> terms{{0, form.b}};
  for (const Term& t : form.h.terms()) terms.push_back({form.r_low + t.exponent * step, t.coeff});
  return SparsePolynomial(spec, std::move(terms));
}

/// Index criterion for permutation polynomials.
///
/// Condition (iii) compares the values of f - b, the part of f of the form x^r h(x^s);
/// translating by b does not change whether f permutes F_q.
inline bool wan_lidl_check(const FieldSpec& spec, const IndexForm& form) {
  const std::uint64_t q1 = spec.q() - 1;
  if (form.m == 0 || q1 % form.m != 0 || form.h.is_zero() || form.h.coefficient(0).is_zero()) {
    throw Error(ErrorCode::kNonMinimalIndex, "malformed index form");
  }
  const std::uint64_t s = q1 / form.m;
  if (detail::index_step(spec, recompose(spec, form)) != s) {
    throw Error(ErrorCode::kNonMinimalIndex, "m=" + std::to_string(form.m) + " is not minimal");
  }
  if (std::gcd(form.r_low, s) != 1) return false;

  const FieldElement zeta = spec.pow(spec.alpha(), s);
  FieldElement zeta_i = spec.one();
  for (std::uint64_t i = 0; i < form.m; ++i) {
    if (form.h.evaluate(spec, zeta_i).is_zero()) return false;
    zeta_i = spec.mul(zeta_i, zeta);
  }

  std::vector<FieldElement> images;
  images.reserve(form.m);
  FieldElement alpha_i = spec.one();
  for (std::uint64_t i = 0; i < form.m; ++i) {
    const FieldElement g = spec.mul(spec.pow(alpha_i, form.r_low), form.h.evaluate(spec, spec.pow(alpha_i, s)));
    images.push_back(spec.pow(g, s));
    alpha_i = spec.mul(alpha_i, spec.alpha());
  }
  std::sort(images.begin(), images.end());
  return std::adjacent_find(images.begin(), images.end()) == images.end();
}

/// True iff f takes q distinct values on F_q.
inline bool is_permutation_bruteforce(const FieldSpec& spec, const SparsePolynomial& f,
                                      const EnumerationGuard& guard = {}) {
  guard.check(spec.q());
  std::vector<std::uint8_t> seen(spec.q(), 0);
  for (std::uint64_t code = 0; code < spec.q(); ++code) {
    const std::uint64_t v = f.evaluate(spec, FieldElement{code}).code();
    if (seen[v] != 0) return false;
    seen[v] = 1;
  }
  return true;
}

inline void require_coprime(std::uint64_t n, std::uint64_t cofactor) {
  if (std::gcd(n, cofactor) != 1) {
    throw Error(ErrorCode::kGcdViolation,
                "gcd(" + std::to_string(n) + ", " + std::to_string(cofactor) + ") != 1");
  }
}

/// chi(a^2 - 1) == (-1)^(n+1).
inline bool criterion_r2(const FieldSpec& spec, std::uint64_t n, FieldElement a) {
  if (spec.p() == 2) throw Error(ErrorCode::kEvenCharacteristic, "r=2 needs odd q");
  require_coprime(n, (spec.q() - 1) / 2);
  const QuadCharValue chi = quadratic_char(spec, spec.sub(spec.mul(a, a), spec.one()));
  return chi.value == (n % 2 == 1 ? 1 : -1);
}

namespace detail {

/// eta exponents of the three ratios (xi+a)/(1+a), (1+a)/(xi^2+a), (xi^2+a)/(xi+a),
/// or nothing when a is one of -1, -xi, -xi^2.
struct CubicRatioProfile {
  bool excluded = false;
  std::array<unsigned, 3> exponents{};
};

inline CubicRatioProfile cubic_ratio_profile(const FieldSpec& spec, const CubicCharacter& eta,
                                             FieldElement a) {
  const FieldElement u0 = spec.add(spec.one(), a);
  const FieldElement u1 = spec.add(eta.xi(), a);
  const FieldElement u2 = spec.add(eta.xi_squared(), a);
  if (u0.is_zero() || u1.is_zero() || u2.is_zero()) return {true, {}};
  return {false,
          {eta(spec.div(u1, u0)).exponent(), eta(spec.div(u0, u2)).exponent(),
           eta(spec.div(u2, u1)).exponent()}};
}

inline bool cubic_profile_admits(const CubicRatioProfile& profile, std::uint64_t n) {
  if (profile.excluded) return false;
  const unsigned forbidden = static_cast<unsigned>((2 * (n % 3)) % 3);
  for (unsigned e : profile.exponents) {
    if (e == forbidden) return false;
  }
  return true;
}

}  // namespace detail

/// a not in {-1, -xi, -xi^2} and no ratio has eta equal to delta^(2n).
inline bool criterion_r3(const FieldSpec& spec, std::uint64_t n, FieldElement a) {
  const CubicCharacter eta(spec);
  require_coprime(n, (spec.q() - 1) / 3);
  return detail::cubic_profile_admits(detail::cubic_ratio_profile(spec, eta, a), n);
}

enum class Method { kCriterion, kBruteForce, kWanLidl };

inline std::string_view to_string(Method method) {
  switch (method) {
    case Method::kCriterion: return "criterion";
    case Method::kBruteForce: return "bruteforce";
    case Method::kWanLidl: return "wanlidl";
  }
  return "unknown";
}

inline Method parse_method(std::string_view text) {
  if (text == "criterion") return Method::kCriterion;
  if (text == "bruteforce") return Method::kBruteForce;
  if (text == "wanlidl") return Method::kWanLidl;
  throw Error(ErrorCode::kInvalidArgument, "unknown method '" + std::string(text) + "'");
}

/// Per-field precomputation of the binomial criterion; the verdict for a given n only
/// depends on n through its parity (r=2) or residue mod 3 (r=3).
class BinomialCriterionTable {
 public:
  BinomialCriterionTable(const FieldSpec& spec, unsigned r, const EnumerationGuard& guard = {})
      : spec_(&spec), r_(r) {
    BinomialCase{1, r, {}}.validate(spec);
    guard.check(spec.q());
    if (r == 2) {
      if (spec.p() == 2) throw Error(ErrorCode::kEvenCharacteristic, "r=2 needs odd q");
      quad_.reserve(spec.q());
      for (std::uint64_t code = 0; code < spec.q(); ++code) {
        const FieldElement a{code};
        quad_.push_back(quadratic_char(spec, spec.sub(spec.mul(a, a), spec.one())).value);
      }
    } else if (r == 3) {
      const CubicCharacter eta(spec);
      cubic_.reserve(spec.q());
      for (std::uint64_t code = 0; code < spec.q(); ++code) {
        cubic_.push_back(detail::cubic_ratio_profile(spec, eta, FieldElement{code}));
      }
    } else {
      throw Error(ErrorCode::kInvalidArgument, "criterion only covers r in {2,3}");
    }
  }

  unsigned r() const { return r_; }

  bool admits(std::uint64_t n, FieldElement a) const {
    require_coprime(n, (spec_->q() - 1) / r_);
    if (r_ == 2) return quad_[a.code()] == (n % 2 == 1 ? 1 : -1);
    return detail::cubic_profile_admits(cubic_[a.code()], n);
  }

  std::vector<FieldElement> admissible(std::uint64_t n) const {
    require_coprime(n, (spec_->q() - 1) / r_);
    std::vector<FieldElement> out;
    for (std::uint64_t code = 0; code < spec_->q(); ++code) {
      if (admits(n, FieldElement{code})) out.emplace_back(code);
    }
    return out;
  }

 private:
  const FieldSpec* spec_;
  unsigned r_;
  std::vector<int> quad_;
  std::vector<detail::CubicRatioProfile> cubic_;
};

/// Brute-force permutation test for x^n (x^e + a), sharing x^n and x^e tables across a.
class BinomialBruteForce {
 public:
  BinomialBruteForce(const FieldSpec& spec, std::uint64_t n, unsigned r,
                     const EnumerationGuard& guard = {})
      : spec_(&spec), seen_(spec.q(), 0) {
    BinomialCase{n, r, {}}.validate(spec);
    guard.check(spec.q());
    const std::uint64_t e = (spec.q() - 1) / r;
    x_n_.reserve(spec.q());
    x_e_.reserve(spec.q());
    for (std::uint64_t code = 0; code < spec.q(); ++code) {
      x_n_.push_back(spec.pow(FieldElement{code}, n));
      x_e_.push_back(spec.pow(FieldElement{code}, e));
    }
  }

  bool permutes(FieldElement a) {
    std::fill(seen_.begin(), seen_.end(), std::uint8_t{0});
    for (std::size_t i = 0; i < x_n_.size(); ++i) {
      const std::uint64_t v = spec_->mul(x_n_[i], spec_->add(x_e_[i], a)).code();
      if (seen_[v] != 0) return false;
      seen_[v] = 1;
    }
    return true;
  }

 private:
  const FieldSpec* spec_;
  std::vector<FieldElement> x_n_;
  std::vector<FieldElement> x_e_;
  std::vector<std::uint8_t> seen_;
};

inline bool binomial_permutes_wanlidl(const FieldSpec& spec, std::uint64_t n, unsigned r,
                                      FieldElement a) {
  const SparsePolynomial f = binomial_polynomial(spec, n, r, a).reduced(spec);
  return wan_lidl_check(spec, compute_index_form(spec, f));
}

/// All a in F_q (a = 0 included) for which x^n (x^((q-1)/r) + a) permutes F_q,
/// in enumeration order.
inline std::vector<FieldElement> enumerate_perm_binomials(const FieldSpec& spec, std::uint64_t n,
                                                          unsigned r, Method method,
                                                          const EnumerationGuard& guard = {}) {
  if (r != 2 && r != 3) throw Error(ErrorCode::kInvalidArgument, "r must be 2 or 3");
  BinomialCase{n, r, {}}.validate(spec);
  std::vector<FieldElement> out;
  switch (method) {
    case Method::kCriterion:
      return BinomialCriterionTable(spec, r, guard).admissible(n);
    case Method::kBruteForce: {
      BinomialBruteForce brute(spec, n, r, guard);
      for (std::uint64_t code = 0; code < spec.q(); ++code) {
        if (brute.permutes(FieldElement{code})) out.emplace_back(code);
      }
      return out;
    }
    case Method::kWanLidl:
      guard.check(spec.q());
      for (std::uint64_t code = 0; code < spec.q(); ++code) {
        if (binomial_permutes_wanlidl(spec, n, r, FieldElement{code})) out.emplace_back(code);
      }
      return out;
  }
  return out;
}

}  // namespace permbinom
