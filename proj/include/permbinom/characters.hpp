#pragma once

#include <array>
#include <cstdint>

#include "permbinom/error.hpp"
#include "permbinom/field.hpp"

namespace permbinom {

/// Value of the quadratic character: -1, 0 or +1.
struct QuadCharValue {
  int value = 0;
  constexpr auto operator<=>(const QuadCharValue&) const = default;
};

/// Value of the cubic character eta, held as the exponent j of delta^j.
///
/// delta is a primitive complex cube root of unity; no complex arithmetic is needed
/// because products of nonzero values add exponents mod 3.
class CubicCharValue {
 public:
  enum class Kind : std::uint8_t { kZero, kE0, kE1, kE2 };

  constexpr CubicCharValue() = default;
  constexpr explicit CubicCharValue(Kind kind) : kind_(kind) {}

  static constexpr CubicCharValue zero() { return CubicCharValue{Kind::kZero}; }
  static constexpr CubicCharValue from_exponent(unsigned j) {
    return CubicCharValue{static_cast<Kind>(1 + j % 3)};
  }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_zero() const { return kind_ == Kind::kZero; }
  /// Exponent in Z/3; undefined for zero.
  constexpr unsigned exponent() const { return static_cast<unsigned>(kind_) - 1; }

  /// eta^2 evaluated at the same argument.
  constexpr CubicCharValue squared() const { return *this * *this; }

  friend constexpr CubicCharValue operator*(CubicCharValue a, CubicCharValue b) {
    if (a.is_zero() || b.is_zero()) return zero();
    return from_exponent(a.exponent() + b.exponent());
  }

  constexpr auto operator<=>(const CubicCharValue&) const = default;

 private:
  Kind kind_ = Kind::kZero;
};

/// Element x + y*delta of Z[delta], delta^2 = -1 - delta.
///
/// Used to evaluate character sums exactly; a sum is a rational integer iff y == 0.
struct EisensteinInt {
  std::int64_t x = 0;
  std::int64_t y = 0;

  static constexpr EisensteinInt delta_power(std::int64_t j) {
    switch (nt::mod_floor(j, 3)) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      default: return {-1, -1};
    }
  }

  constexpr bool is_integer() const { return y == 0; }

  friend constexpr EisensteinInt operator+(EisensteinInt a, EisensteinInt b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend constexpr EisensteinInt operator-(EisensteinInt a, EisensteinInt b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend constexpr EisensteinInt operator*(EisensteinInt a, EisensteinInt b) {
    // (a.x + a.y d)(b.x + b.y d) with d^2 = -1 - d
    const std::int64_t yy = a.y * b.y;
    return {a.x * b.x - yy, a.x * b.y + a.y * b.x - yy};
  }
  EisensteinInt& operator+=(EisensteinInt o) { return *this = *this + o; }

  constexpr auto operator<=>(const EisensteinInt&) const = default;
};

inline QuadCharValue quadratic_char(const FieldSpec& spec, FieldElement a) {
  if (spec.p() == 2) throw Error(ErrorCode::kEvenCharacteristic, "quadratic character needs odd q");
  if (a.is_zero()) return {0};
  return {spec.pow(a, (spec.q() - 1) / 2) == spec.one() ? 1 : -1};
}

/// Evaluates eta for the cube root of unity xi = alpha^((q-1)/3) fixed by the field's
/// canonical primitive element.
class CubicCharacter {
 public:
  explicit CubicCharacter(const FieldSpec& spec) : spec_(&spec) {
    if (spec.q() % 3 != 1) {
      throw Error(ErrorCode::kBadFieldForCubic, "q=" + std::to_string(spec.q()) + " is not 1 mod 3");
    }
    xi_ = spec.root_of_unity(3);
    powers_ = {spec.one(), xi_, spec.mul(xi_, xi_)};
  }

  FieldElement xi() const { return xi_; }
  FieldElement xi_squared() const { return powers_[2]; }

  CubicCharValue operator()(FieldElement a) const {
    if (a.is_zero()) return CubicCharValue::zero();
    const FieldElement t = spec_->pow(a, (spec_->q() - 1) / 3);
    for (unsigned j = 0; j < 3; ++j) {
      if (t == powers_[j]) return CubicCharValue::from_exponent(j);
    }
    throw Error(ErrorCode::kCrossCheckFailed, "a^((q-1)/3) is not a cube root of unity");
  }

  /// eta(b) + eta^2(b): 2 for nonzero cubes, -1 for non-cubes, 0 at zero.
  int eta_plus_eta_squared(FieldElement b) const {
    const CubicCharValue v = (*this)(b);
    if (v.is_zero()) return 0;
    return v.exponent() == 0 ? 2 : -1;
  }

 private:
  const FieldSpec* spec_;
  FieldElement xi_;
  std::array<FieldElement, 3> powers_{};
};

inline CubicCharValue cubic_char(const FieldSpec& spec, FieldElement a) {
  return CubicCharacter(spec)(a);
}

/// Sum over all a in F_q of a^m, with 0^0 = 1.
inline FieldElement power_sum(const FieldSpec& spec, std::uint64_t m,
                              const EnumerationGuard& guard = {}) {
  guard.check(spec.q());
  FieldElement total = spec.zero();
  for (std::uint64_t code = 0; code < spec.q(); ++code) {
    total = spec.add(total, spec.pow(FieldElement{code}, m));
  }
  return total;
}

}  // namespace permbinom
