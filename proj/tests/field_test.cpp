#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "permbinom/field.hpp"

using namespace permbinom;

namespace {

std::uint64_t order_by_powering(const FieldSpec& spec, FieldElement x) {
  FieldElement acc = x;
  std::uint64_t order = 1;
  while (acc != spec.one()) {
    acc = spec.mul(acc, x);
    ++order;
  }
  return order;
}

// Extended Euclid modulo a prime, independent of the field code.
std::int64_t egcd_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - quot * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - quot * s);
  }
  return ((old_s % m) + m) % m;
}

int moebius(std::uint64_t n) {
  int mu = 1;
  for (const auto& [p, e] : nt::factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

template <typename Fn>
void expect_error(ErrorCode code, Fn&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(MakeField, PrimeField13) {
  const FieldSpec f = make_field(13, 1);
  EXPECT_EQ(f.q(), 13U);
  EXPECT_EQ(f.alpha(), FieldElement{2});
  EXPECT_EQ(order_by_powering(f, FieldElement{2}), 12U);
}

TEST(MakeField, F4UsesTheOnlyIrreducibleQuadratic) {
  const FieldSpec f = make_field(2, 2);
  EXPECT_EQ(f.q(), 4U);
  EXPECT_EQ(f.modulus(), (PrimePoly{1, 1, 1}));
  EXPECT_EQ(f.alpha(), FieldElement{2});  // x
}

TEST(MakeField, F73PrimitiveRootIsFive) {
  EXPECT_EQ(make_field(73, 1).alpha(), FieldElement{5});
}

TEST(MakeField, Errors) {
  expect_error(ErrorCode::kNonPrime, [] { make_field(4, 1); });
  expect_error(ErrorCode::kReducibleModulus, [] { make_field(2, 2, PrimePoly{1, 0, 1}); });
  expect_error(ErrorCode::kDegreeMismatch, [] { make_field(3, 2, PrimePoly{1, 0, 0, 1}); });
  expect_error(ErrorCode::kDegreeMismatch, [] { make_field(3, 2, PrimePoly{1, 0, 2}); });
}

TEST(MakeField, SuppliedModulusIsUsed) {
  const FieldSpec f = make_field(3, 2, PrimePoly{2, 1, 1});  // x^2 + x + 2
  EXPECT_EQ(f.modulus(), (PrimePoly{2, 1, 1}));
  EXPECT_EQ(f.order_of(f.alpha()), 8U);
}

TEST(MakeField, IrreducibleCountsMatchNecklaceFormula) {
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
    for (unsigned k = 1; k <= (p == 2 ? 8U : 4U); ++k) {
      std::int64_t expected = 0;
      for (std::uint64_t d : nt::divisors(k)) {
        std::int64_t power = 1;
        for (std::uint64_t i = 0; i < k / d; ++i) power *= static_cast<std::int64_t>(p);
        expected += moebius(d) * power;
      }
      expected /= k;
      std::uint64_t candidates = 1;
      for (unsigned i = 0; i < k; ++i) candidates *= p;
      std::int64_t found = 0;
      for (std::uint64_t code = 0; code < candidates; ++code) {
        PrimePoly f(k + 1, 0);
        std::uint64_t c = code;
        for (unsigned i = 0; i < k; ++i) {
          f[i] = c % p;
          c /= p;
        }
        f[k] = 1;
        found += is_irreducible(f, p) ? 1 : 0;
      }
      EXPECT_EQ(found, expected) << "p=" << p << " k=" << k;
    }
  }
}

TEST(FieldArithmetic, InverseInF13) {
  const FieldSpec f = make_field(13, 1);
  EXPECT_EQ(f.inv(FieldElement{5}), FieldElement{8});
  for (std::uint64_t a = 1; a < 13; ++a) {
    EXPECT_EQ(f.inv(FieldElement{a}).code(), static_cast<std::uint64_t>(egcd_inverse(a, 13)));
  }
  expect_error(ErrorCode::kDivisionByZero, [&] { f.inv(f.zero()); });
}

TEST(FieldArithmetic, XSquaredInF4) {
  const FieldSpec f = make_field(2, 2);
  const FieldElement x = f.from_coefficients(std::vector<std::uint64_t>{0, 1});
  EXPECT_EQ(f.mul(x, x), f.from_coefficients(std::vector<std::uint64_t>{1, 1}));
}

TEST(FieldArithmetic, FermatLittleTheorem) {
  for (auto [p, k] : {std::pair{13ULL, 1U}, {2ULL, 4U}, {3ULL, 3U}, {7ULL, 2U}}) {
    const FieldSpec f = make_field(p, k);
    for (std::uint64_t c = 1; c < f.q(); ++c) EXPECT_EQ(f.pow(FieldElement{c}, f.q() - 1), f.one());
  }
}

TEST(FieldArithmetic, NegativeExponentsUseTheInverse) {
  const FieldSpec f = make_field(5, 2);
  for (std::uint64_t c = 1; c < f.q(); ++c) {
    const FieldElement a{c};
    EXPECT_EQ(f.pow(a, -3), f.inv(f.pow(a, 3)));
    EXPECT_EQ(f.pow(a, std::int64_t{0}), f.one());
  }
  EXPECT_EQ(f.pow(f.zero(), 0U), f.one());
}

TEST(FieldArithmetic, AxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  for (auto [p, k] : {std::pair{7ULL, 1U}, {3ULL, 2U}, {2ULL, 4U}, {5ULL, 2U}, {3ULL, 3U},
                      {7ULL, 2U}, {2ULL, 6U}, {3ULL, 4U}, {5ULL, 3U}, {7ULL, 3U}, {65537ULL, 1U}}) {
    const FieldSpec f = make_field(p, k);
    std::uniform_int_distribution<std::uint64_t> pick(0, f.q() - 1);
    for (int trial = 0; trial < 300; ++trial) {
      const FieldElement a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
      EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
      EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
      EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      EXPECT_EQ(f.mul(a, b), f.mul(b, a));
      EXPECT_EQ(f.add(a, f.neg(a)), f.zero());
      EXPECT_EQ(f.sub(f.add(a, b), b), a);
      if (!a.is_zero()) {
        EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
      }
    }
  }
}

TEST(ElementOrder, Examples) {
  const FieldSpec f13 = make_field(13, 1);
  EXPECT_EQ(f13.order_of(FieldElement{2}), 12U);
  EXPECT_EQ(f13.order_of(FieldElement{12}), 2U);
  const FieldSpec f4 = make_field(2, 2);
  EXPECT_EQ(f4.order_of(FieldElement{2}), 3U);
  expect_error(ErrorCode::kZeroElement, [&] { f13.order_of(f13.zero()); });
}

TEST(ElementOrder, MatchesPoweringOracle) {
  for (auto [p, k] : {std::pair{13ULL, 1U}, {2ULL, 4U}, {3ULL, 3U}, {5ULL, 2U}}) {
    const FieldSpec f = make_field(p, k);
    for (std::uint64_t c = 1; c < f.q(); ++c) {
      EXPECT_EQ(f.order_of(FieldElement{c}), order_by_powering(f, FieldElement{c}));
    }
  }
}

TEST(ElementOrder, RootsOfUnityHaveExactOrder) {
  for (auto [p, k] : {std::pair{73ULL, 1U}, {2ULL, 6U}, {7ULL, 2U}, {3ULL, 4U}}) {
    const FieldSpec f = make_field(p, k);
    EXPECT_EQ(f.order_of(f.alpha()), f.q() - 1);
    for (std::uint64_t d : nt::divisors(f.q() - 1)) EXPECT_EQ(f.order_of(f.root_of_unity(d)), d);
  }
}

TEST(EnumerateElements, SmallFields) {
  const FieldSpec f3 = make_field(3, 1);
  EXPECT_EQ(enumerate_elements(f3), (std::vector<FieldElement>{FieldElement{0}, FieldElement{1}, FieldElement{2}}));

  const FieldSpec f4 = make_field(2, 2);
  const auto e4 = enumerate_elements(f4);
  ASSERT_EQ(e4.size(), 4U);
  EXPECT_EQ(f4.coefficients(e4[0]), (std::vector<std::uint64_t>{0, 0}));
  EXPECT_EQ(f4.coefficients(e4[1]), (std::vector<std::uint64_t>{1, 0}));
  EXPECT_EQ(f4.coefficients(e4[2]), (std::vector<std::uint64_t>{0, 1}));
  EXPECT_EQ(f4.coefficients(e4[3]), (std::vector<std::uint64_t>{1, 1}));
  EXPECT_EQ(f4.format(e4[3]), "x+1");

  const FieldSpec f9 = make_field(3, 2);
  const auto e9 = enumerate_elements(f9);
  EXPECT_EQ(e9.size(), 9U);
  EXPECT_TRUE(e9.front().is_zero());
  EXPECT_EQ(std::set<FieldElement>(e9.begin(), e9.end()).size(), 9U);
}

TEST(EnumerateElements, GuardRefusesLargeFields) {
  const FieldSpec big = make_field(2, 21);
  expect_error(ErrorCode::kGuardExceeded, [&] { enumerate_elements(big); });
  EnumerationGuard forced;
  forced.force = true;
  EXPECT_NO_THROW(forced.check(big.q()));

  ::setenv("PERMBINOM_GUARD", "100", 1);
  EXPECT_EQ(enumeration_limit(), 100U);
  expect_error(ErrorCode::kGuardExceeded, [] { enumerate_elements(make_field(101, 1)); });
  ::unsetenv("PERMBINOM_GUARD");
  EXPECT_EQ(enumeration_limit(), kDefaultEnumerationLimit);
}

TEST(FieldString, Parses) {
  EXPECT_EQ(parse_field_string("73"), (std::pair<std::uint64_t, unsigned>{73, 1}));
  EXPECT_EQ(parse_field_string("2^4"), (std::pair<std::uint64_t, unsigned>{2, 4}));
  EXPECT_EQ(parse_field_string("343"), (std::pair<std::uint64_t, unsigned>{7, 3}));
  EXPECT_EQ(parse_field_string("12"), (std::pair<std::uint64_t, unsigned>{12, 1}));  // rejected later as non-prime
  expect_error(ErrorCode::kInvalidArgument, [] { parse_field_string("7x"); });
  expect_error(ErrorCode::kInvalidArgument, [] { parse_field_string("^3"); });
}
