#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "permbinom/characters.hpp"
#include "permbinom/closed_form.hpp"
#include "permbinom/curves.hpp"
#include "permbinom/field.hpp"
#include "permbinom/permutation.hpp"
#include "permbinom/sharpness.hpp"
#include "permbinom/sweep.hpp"

namespace permbinom::acceptance {

struct Outcome {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double limit_seconds = 0.0;

  std::string line() const {
    char buf[96];
    std::snprintf(buf, sizeof buf, " (%.2fs, limit %.0fs)", seconds, limit_seconds);
    return std::string(passed ? "PASS" : "FAIL") + " [" + std::to_string(id) + "] " + title +
           ": " + detail + buf;
  }
};

namespace detail {

/// Runs body, timing it; an exception counts as failure.
inline Outcome timed(int id, std::string title, double limit, const std::function<bool(std::string&)>& body) {
  Outcome o{id, std::move(title), false, "", 0.0, limit};
  const auto start = std::chrono::steady_clock::now();
  try {
    o.passed = body(o.detail);
  } catch (const std::exception& e) {
    o.detail = std::string("exception: ") + e.what();
    o.passed = false;
  }
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.seconds >= limit) {
    o.passed = false;
    o.detail += " [runtime limit exceeded]";
  }
  return o;
}

inline std::vector<std::uint64_t> odd_primes_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = lo; p <= hi; ++p) {
    if (p % 2 == 1 && nt::is_prime(p)) out.push_back(p);
  }
  return out;
}

}  // namespace detail

inline Outcome example73() {
  return detail::timed(1, "F_73, n=35, r=3 admissible set", 1.0, [](std::string& detail) {
    const FieldSpec spec = make_field(73, 1);
    const std::vector<std::uint64_t> expected{0, 2, 4, 16, 18, 21, 22, 30, 32, 33, 37, 45, 55, 57, 68, 71};
    std::vector<std::uint64_t> got;
    for (FieldElement a : enumerate_perm_binomials(spec, 35, 3, Method::kCriterion)) got.push_back(a.code());
    std::vector<std::uint64_t> brute;
    for (FieldElement a : enumerate_perm_binomials(spec, 35, 3, Method::kBruteForce)) brute.push_back(a.code());
    detail = "criterion count " + std::to_string(got.size()) + ", brute count " + std::to_string(brute.size());
    return got == expected && brute == expected;
  });
}

inline Outcome kappa_values() {
  return detail::timed(2, "kappa values and Hasse cross-check", 5.0, [](std::string& detail) {
    bool ok = compute_kappa(7).kappa == 1 && compute_kappa(13).kappa == -5 && compute_kappa(73).kappa == 7;
    std::size_t checked = 0;
    for (std::uint64_t p : detail::odd_primes_between(5, 499)) {
      if (p % 3 != 1) continue;
      const KappaRecord rec = compute_kappa(p);  // throws on a point-count mismatch
      const auto ip = static_cast<std::int64_t>(p);
      ok = ok && rec.curve_count == ip + 1 + rec.kappa && rec.kappa * rec.kappa <= 4 * ip;
      ++checked;
    }
    detail = std::to_string(checked) + " primes cross-checked";
    return ok;
  });
}

inline SweepConfig acceptance_sweep_config(unsigned r, std::uint64_t q_max, unsigned jobs) {
  SweepConfig cfg;
  cfg.q_max = q_max;
  cfg.r_set = {r};
  cfg.methods = {Method::kCriterion, Method::kBruteForce};
  cfg.jobs = jobs;
  cfg.brute_full_q_max = 100;
  cfg.brute_sample_rate = 0.0;
  return cfg;
}

inline bool only_bound_failures(const SweepFailure& f) {
  return f.route_b == "mz_bounds" || f.route_b == "cor_bounds";
}

inline Outcome exactness_sweep(int id, unsigned r, std::uint64_t q_max, const SweepResult& result,
                               double seconds) {
  Outcome o{id, "r=" + std::to_string(r) + " exactness sweep q<=" + std::to_string(q_max), false, "",
            seconds, 120.0};
  std::size_t math_failures = 0, brute_cells = 0;
  for (const auto& f : result.failures) math_failures += only_bound_failures(f) ? 0 : 1;
  for (const auto& c : result.cells) brute_cells += c.brute_count ? 1 : 0;
  bool brute_complete = true;
  for (const auto& c : result.cells) {
    if (c.q <= 100 && !c.brute_count) brute_complete = false;
  }
  o.passed = math_failures == 0 && brute_complete && !result.cells.empty() && seconds < o.limit_seconds;
  o.detail = std::to_string(result.cells.size()) + " cells, " + std::to_string(brute_cells) +
             " brute-forced, " + std::to_string(math_failures) + " failures";
  if (seconds >= o.limit_seconds) o.detail += " [runtime limit exceeded]";
  return o;
}

inline Outcome point_count_congruence() {
  return detail::timed(5, "point-count congruence 5<=p<=61", 60.0, [](std::string& detail) {
    std::size_t curves = 0, failures = 0;
    for (std::uint64_t p : detail::odd_primes_between(5, 61)) {
      const FieldSpec spec = make_field(p, 1);
      const auto ip = static_cast<std::int64_t>(p);
      for (std::uint64_t A = 0; A < p; ++A) {
        for (std::uint64_t B = 0; B < p; ++B) {
          const std::int64_t count = count_points(spec, {FieldElement{A}, FieldElement{B}});
          const std::int64_t lhs = nt::mod_floor(count - ip - 1, ip);
          if (lhs != static_cast<std::int64_t>(point_count_residue(p, A, B))) ++failures;
          ++curves;
        }
      }
    }
    detail = std::to_string(curves) + " curves, " + std::to_string(failures) + " failures";
    return failures == 0;
  });
}

inline Outcome extension_counts() {
  return detail::timed(6, "extension point counts vs trace recurrence", 120.0, [](std::string& detail) {
    bool ok = true;
    for (std::uint64_t p : {7, 13, 19, 31, 37, 73}) {
      for (unsigned j : {1U, 2U}) {
        const FieldSpec spec = make_field(p, j);
        const FieldElement inv4 = spec.inv(spec.from_int(4));
        const std::int64_t count = count_points_extension(spec, spec.zero(), inv4);
        const BigInt expected = nt::big_pow(p, j) + 1 - pi_trace(p, j);
        if (BigInt(count) != expected) {
          ok = false;
          detail += "p=" + std::to_string(p) + " j=" + std::to_string(j) + " mismatch; ";
        }
      }
    }
    if (ok) detail = "12 (p, j) pairs match";
    return ok;
  });
}

inline Outcome char2_sums() {
  return detail::timed(7, "characteristic-2 cubic sums", 60.0, [](std::string& detail) {
    bool ok = true;
    for (unsigned k : {1U, 2U, 3U}) {
      const std::int64_t got = char2_cubic_sum(k);
      std::int64_t expected = -2;
      std::int64_t power = 1;
      for (unsigned i = 0; i <= k; ++i) power *= -2;
      expected += power;
      detail += "k=" + std::to_string(k) + ":" + std::to_string(got) + " ";
      ok = ok && got == expected;
    }
    return ok;
  });
}

inline Outcome bounds_containment(const SweepResult& r2, const SweepResult& r3) {
  return detail::timed(8, "bounds containment", 60.0, [&](std::string& detail) {
    std::size_t violations = 0, checked = 0;
    for (const SweepResult* res : {&r2, &r3}) {
      for (const auto& c : res->cells) {
        for (const std::optional<std::int64_t>& count : {c.criterion_count, c.brute_count}) {
          if (!count) continue;
          ++checked;
          if (!masuda_zieve_integer_range(c.q, c.r).contains(*count)) ++violations;
          if (c.r == 3 && !corollary_bounds_r3(c.q).contains(*count)) ++violations;
        }
      }
      for (const auto& f : res->failures) violations += only_bound_failures(f) ? 1 : 0;
    }
    detail = std::to_string(checked) + " counts, " + std::to_string(violations) + " violations";
    return violations == 0 && checked > 0;
  });
}

inline Outcome sharpness_witnesses() {
  return detail::timed(9, "sharpness witnesses k=1217, k=1578", 10.0, [](std::string& detail) {
    SharpnessOptions opts;
    opts.digits = 40;
    opts.max_k = 2000;
    const SharpnessProbe first = sharpness_probe(73, 35, 12, opts);
    const SharpnessProbe second = sharpness_probe(73, 35, 12, opts);
    const SharpnessFinding* f1217 = nullptr;
    const SharpnessFinding* f1578 = nullptr;
    for (const auto& f : first.findings) {
      if (f.k == 1217) f1217 = &f;
      if (f.k == 1578) f1578 = &f;
    }
    if (f1217 == nullptr || f1578 == nullptr) {
      detail = "convergent denominators 1217/1578 not reached";
      return false;
    }
    bool stable = first.findings.size() == second.findings.size();
    for (std::size_t i = 0; stable && i < first.findings.size(); ++i) {
      stable = first.findings[i].deviation.str().substr(0, 13) ==
               second.findings[i].deviation.str().substr(0, 13);
    }
    detail = "d_1217=" + f1217->deviation.str().substr(0, 16) +
             " d_1578=" + f1578->deviation.str().substr(0, 17);
    return f1217->deviation.certainly_greater("1.999998451823") &&
           f1578->deviation.certainly_less("-1.99999906282") && stable;
  });
}

inline Outcome character_identities() {
  return detail::timed(10, "character sum and power-sum identities q<=64", 60.0, [](std::string& detail) {
    std::size_t fields = 0, failures = 0;
    for (std::uint64_t q = 2; q <= 64; ++q) {
      const auto pp = nt::as_prime_power(q);
      if (!pp) continue;
      const FieldSpec spec = make_field(pp->prime, pp->exponent);
      ++fields;
      if (q % 2 == 1) {
        std::int64_t sum = 0;
        for (std::uint64_t c = 1; c < q; ++c) sum += quadratic_char(spec, FieldElement{c}).value;
        failures += sum != 0 ? 1 : 0;
      }
      if (q % 3 == 1) {
        const CubicCharacter eta(spec);
        std::array<std::uint64_t, 3> classes{};
        for (std::uint64_t c = 1; c < q; ++c) ++classes[eta(FieldElement{c}).exponent()];
        for (auto count : classes) failures += count != (q - 1) / 3 ? 1 : 0;
      }
      for (std::uint64_t m = 0; m <= 3 * (q - 1); ++m) {
        const FieldElement expected =
            (m != 0 && m % (q - 1) == 0) ? spec.neg(spec.one()) : spec.zero();
        failures += power_sum(spec, m) != expected ? 1 : 0;
      }
    }
    detail = std::to_string(fields) + " fields, " + std::to_string(failures) + " failures";
    return failures == 0;
  });
}

/// Runs every acceptance criterion in order; sweeps are shared by criteria 3, 4 and 8.
inline std::vector<Outcome> run_all(unsigned jobs = 1) {
  std::vector<Outcome> out;
  out.push_back(example73());
  out.push_back(kappa_values());

  auto run_sweep = [&](unsigned r, std::uint64_t q_max, SweepResult& result) {
    const auto start = std::chrono::steady_clock::now();
    result = run_verify_sweep(acceptance_sweep_config(r, q_max, jobs));
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  SweepResult r2, r3;
  const double t2 = run_sweep(2, 343, r2);
  out.push_back(exactness_sweep(3, 2, 343, r2, t2));
  const double t3 = run_sweep(3, 400, r3);
  out.push_back(exactness_sweep(4, 3, 400, r3, t3));

  out.push_back(point_count_congruence());
  out.push_back(extension_counts());
  out.push_back(char2_sums());
  out.push_back(bounds_containment(r2, r3));
  out.push_back(sharpness_witnesses());
  out.push_back(character_identities());
  return out;
}

}  // namespace permbinom::acceptance
