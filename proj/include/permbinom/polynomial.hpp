#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "permbinom/field.hpp"

namespace permbinom {

struct Term {
  std::uint64_t exponent = 0;
  FieldElement coeff;
};

/// Sparse polynomial over F_q with terms sorted by ascending exponent and no zero
/// coefficients.
class SparsePolynomial {
 public:
  SparsePolynomial() = default;

  /// Merges repeated exponents and drops vanishing terms.
  SparsePolynomial(const FieldSpec& spec, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
    for (const Term& t : terms) {
      if (!terms_.empty() && terms_.back().exponent == t.exponent) {
        terms_.back().coeff = spec.add(terms_.back().coeff, t.coeff);
        if (terms_.back().coeff.is_zero()) terms_.pop_back();
      } else if (!t.coeff.is_zero()) {
        terms_.push_back(t);
      }
    }
  }

  static SparsePolynomial monomial(const FieldSpec& spec, std::uint64_t exponent) {
    return SparsePolynomial(spec, {{exponent, spec.one()}});
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::uint64_t degree() const { return terms_.empty() ? 0 : terms_.back().exponent; }

  FieldElement coefficient(std::uint64_t exponent) const {
    for (const Term& t : terms_) {
      if (t.exponent == exponent) return t.coeff;
    }
    return FieldElement{};
  }

  FieldElement evaluate(const FieldSpec& spec, FieldElement x) const {
    FieldElement acc = spec.zero();
    for (const Term& t : terms_) acc = spec.add(acc, spec.mul(t.coeff, spec.pow(x, t.exponent)));
    return acc;
  }

  /// Same function on F_q with every exponent reduced below q (x^q = x).
  SparsePolynomial reduced(const FieldSpec& spec) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (Term t : terms_) {
      if (t.exponent >= spec.q()) t.exponent = (t.exponent - 1) % (spec.q() - 1) + 1;
      out.push_back(t);
    }
    return SparsePolynomial(spec, std::move(out));
  }

  bool operator==(const SparsePolynomial& other) const {
    return std::equal(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                      [](const Term& a, const Term& b) {
                        return a.exponent == b.exponent && a.coeff == b.coeff;
                      });
  }

 private:
  std::vector<Term> terms_;
};

/// x^n (x^((q-1)/r) + a).
inline SparsePolynomial binomial_polynomial(const FieldSpec& spec, std::uint64_t n, unsigned r,
                                            FieldElement a) {
  return SparsePolynomial(spec, {{n + (spec.q() - 1) / r, spec.one()}, {n, a}});
}

}  // namespace permbinom
