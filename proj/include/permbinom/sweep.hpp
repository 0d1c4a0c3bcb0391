#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "permbinom/closed_form.hpp"
#include "permbinom/field.hpp"
#include "permbinom/permutation.hpp"

namespace permbinom {

enum class ReportFormat { kJson, kCsv, kText };

inline ReportFormat parse_format(std::string_view text) {
  if (text == "json") return ReportFormat::kJson;
  if (text == "csv") return ReportFormat::kCsv;
  if (text == "text") return ReportFormat::kText;
  throw Error(ErrorCode::kInvalidArgument, "unknown format '" + std::string(text) + "'");
}

struct SweepConfig {
  std::uint64_t q_max = 343;
  std::set<unsigned> r_set{2, 3};
  std::set<Method> methods{Method::kCriterion, Method::kBruteForce};
  unsigned jobs = 1;
  /// Every cell with q at or below this is brute-forced.
  std::uint64_t brute_full_q_max = 100;
  /// Fraction of larger cells that are brute-forced.
  double brute_sample_rate = 0.1;
  std::uint64_t seed = 20240917;
  EnumerationGuard guard;

  void validate() const {
    guard.check(q_max);
    if (r_set.empty()) throw Error(ErrorCode::kInvalidArgument, "empty r set");
    for (unsigned r : r_set) {
      if (r != 2 && r != 3) throw Error(ErrorCode::kInvalidArgument, "r must be 2 or 3");
    }
    if (jobs == 0) throw Error(ErrorCode::kInvalidArgument, "jobs must be >= 1");
    if (brute_sample_rate < 0.0 || brute_sample_rate > 1.0) {
      throw Error(ErrorCode::kInvalidArgument, "sample rate must be in [0, 1]");
    }
  }
};

struct SweepFailure {
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  unsigned r = 0;
  std::string route_a;
  std::string route_b;
  std::string diff;
};

struct SweepResult {
  std::vector<CountReport> cells;
  std::vector<SweepFailure> failures;
  std::chrono::milliseconds elapsed{0};

  int exit_code() const { return failures.empty() ? 0 : 1; }
};

namespace detail {

struct SweepUnit {
  std::uint64_t q;
  unsigned r;
};

inline bool sample_brute(const SweepConfig& cfg, std::uint64_t q, std::uint64_t n, unsigned r) {
  if (q <= cfg.brute_full_q_max) return true;
  std::seed_seq seq{cfg.seed, q, n, static_cast<std::uint64_t>(r)};
  std::mt19937_64 rng(seq);
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < cfg.brute_sample_rate;
}

struct UnitOutput {
  std::vector<CountReport> cells;
  std::vector<SweepFailure> failures;
};

inline UnitOutput run_unit(const SweepConfig& cfg, const SweepUnit& unit) {
  UnitOutput out;
  const auto pp = *nt::as_prime_power(unit.q);
  const FieldSpec spec = make_field(pp.prime, pp.exponent);
  const std::uint64_t cofactor = (unit.q - 1) / unit.r;
  const bool use_criterion = cfg.methods.contains(Method::kCriterion);
  const bool use_brute = cfg.methods.contains(Method::kBruteForce);
  const bool use_wanlidl = cfg.methods.contains(Method::kWanLidl);
  std::optional<BinomialCriterionTable> table;
  if (use_criterion) table.emplace(spec, unit.r, cfg.guard);

  auto fail = [&](std::uint64_t n, const char* a, const char* b, std::string diff) {
    out.failures.push_back({unit.q, n, unit.r, a, b, std::move(diff)});
  };

  std::optional<IntInterval> cor;
  if (unit.r == 3) cor = corollary_bounds_r3(unit.q);
  const IntInterval mz = masuda_zieve_integer_range(unit.q, unit.r);
  const SurdInterval mz_exact = masuda_zieve_bounds(unit.q, unit.r);
  const BigInt s_k = unit.r == 3 ? pi_trace(spec.p(), spec.k()) : BigInt(0);

  for (std::uint64_t n = 1; n < unit.q; ++n) {
    if (std::gcd(n, cofactor) != 1) continue;
    CountReport rep;
    rep.q = unit.q;
    rep.p = spec.p();
    rep.k = spec.k();
    rep.n = n;
    rep.r = unit.r;
    rep.mz = mz_exact;
    rep.cor = cor;
    try {
      if (unit.r == 2) {
        rep.closed_count = closed_count_r2(unit.q, n);
      } else {
        rep.eps = epsilons(unit.q, n);
        rep.s_k = s_k;
        rep.closed_count = closed_count_r3(spec.p(), spec.k(), n);
      }
    } catch (const Error& e) {
      fail(n, "closed", "closed", e.what());
      out.cells.push_back(std::move(rep));
      continue;
    }
    const auto closed = static_cast<std::int64_t>(rep.closed_count);
    if (use_criterion) {
      rep.criterion_count = static_cast<std::int64_t>(table->admissible(n).size());
      if (*rep.criterion_count != closed) {
        fail(n, "closed", "criterion", std::to_string(*rep.criterion_count - closed));
      }
    }
    if (use_brute && sample_brute(cfg, unit.q, n, unit.r)) {
      BinomialBruteForce brute(spec, n, unit.r, cfg.guard);
      std::int64_t count = 0;
      for (std::uint64_t code = 0; code < unit.q; ++code) {
        const bool permutes = brute.permutes(FieldElement{code});
        count += permutes ? 1 : 0;
        if (use_criterion && permutes != table->admits(n, FieldElement{code})) {
          fail(n, "criterion", "bruteforce", "disagree at a=" + std::to_string(code));
        }
      }
      rep.brute_count = count;
      if (count != closed) fail(n, "closed", "bruteforce", std::to_string(count - closed));
    }
    if (use_wanlidl) {
      std::int64_t count = 0;
      for (std::uint64_t code = 0; code < unit.q; ++code) {
        count += binomial_permutes_wanlidl(spec, n, unit.r, FieldElement{code}) ? 1 : 0;
      }
      if (count != closed) fail(n, "closed", "wanlidl", std::to_string(count - closed));
    }
    if (!mz.contains(closed)) fail(n, "closed", "mz_bounds", std::to_string(closed));
    if (cor && !cor->contains(closed)) fail(n, "closed", "cor_bounds", std::to_string(closed));
    out.cells.push_back(std::move(rep));
  }
  return out;
}

}  // namespace detail

/// Prime powers q <= q_max admissible for r (odd q for r=2, q = 1 mod 3 for r=3).
inline std::vector<std::uint64_t> admissible_fields(std::uint64_t q_max, unsigned r) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= q_max; ++q) {
    if (!nt::as_prime_power(q)) continue;
    if ((q - 1) % r != 0) continue;
    out.push_back(q);
  }
  return out;
}

/// Closed form vs criterion vs brute force over every admissible cell; cell order is
/// (r, q, n) ascending regardless of the worker count.
inline SweepResult run_verify_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  std::vector<detail::SweepUnit> units;
  for (unsigned r : cfg.r_set) {
    for (std::uint64_t q : admissible_fields(cfg.q_max, r)) units.push_back({q, r});
  }
  std::vector<detail::UnitOutput> outputs(units.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < units.size(); i = next++) {
      try {
        outputs[i] = detail::run_unit(cfg, units[i]);
      } catch (const std::exception& e) {
        outputs[i].failures.push_back({units[i].q, 0, units[i].r, "sweep", "sweep", e.what()});
      }
    }
  };
  const unsigned workers = std::min<unsigned>(cfg.jobs, static_cast<unsigned>(std::max<std::size_t>(1, units.size())));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
  }
  SweepResult result;
  for (auto& o : outputs) {
    std::move(o.cells.begin(), o.cells.end(), std::back_inserter(result.cells));
    std::move(o.failures.begin(), o.failures.end(), std::back_inserter(result.failures));
  }
  result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return result;
}

}  // namespace permbinom
