// Command-line front end: enumerate, count, bounds, kappa, trace, curve, char, sharpness,
// sweep and selftest.
//
// Exit codes: 0 success, 1 mathematical disagreement, 2 usage or configuration error.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "permbinom/acceptance.hpp"
#include "permbinom/permbinom.hpp"

namespace {

using namespace permbinom;

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
  std::string field = "";
  std::string modulus;
  std::string format = "json";
  std::string out;
  bool force = false;
  unsigned jobs = 1;
};

PrimePoly parse_modulus(const std::string& text) {
  PrimePoly out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoull(item));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kInvalidArgument, "bad modulus coefficient '" + item + "'");
    }
  }
  return out;
}

FieldSpec field_from(const CommonOptions& opts) {
  if (opts.field.empty()) throw Error(ErrorCode::kInvalidArgument, "--field is required");
  const auto [p, k] = parse_field_string(opts.field);
  std::optional<PrimePoly> modulus;
  if (!opts.modulus.empty()) modulus = parse_modulus(opts.modulus);
  return make_field(p, k, modulus);
}

EnumerationGuard guard_from(const CommonOptions& opts) {
  EnumerationGuard guard;
  guard.force = opts.force;
  return guard;
}

void write_output(const CommonOptions& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opts.out, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIoError, "cannot open " + opts.out);
  file << text;
  if (!file) throw Error(ErrorCode::kIoError, "write failed for " + opts.out);
}

/// "inv4" or a canonical integer encoding.
FieldElement parse_curve_coeff(const FieldSpec& spec, const std::string& text) {
  if (text == "inv4") return spec.inv(spec.from_int(4));
  try {
    return spec.element(std::stoull(text));
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kInvalidArgument, "bad curve coefficient '" + text + "'");
  }
}

std::string json_line(const Json& j) { return j.dump() + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation binomials x^n(x^((q-1)/r)+a) over finite fields"};
  app.require_subcommand(1);
  CommonOptions opts;

  auto add_common = [&](CLI::App* cmd, bool with_field) {
    if (with_field) {
      cmd->add_option("--field", opts.field, "Field as p or p^k")->required();
      cmd->add_option("--modulus", opts.modulus, "Modulus coefficients c0,c1,...,1");
    }
    cmd->add_option("--format", opts.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", opts.out, "Write output to a file");
    cmd->add_flag("--force", opts.force, "Ignore the enumeration guard");
  };

  std::uint64_t n = 1;
  unsigned r = 3;
  std::string method = "criterion";
  auto* enumerate = app.add_subcommand("enumerate", "List all a for which the binomial permutes F_q");
  add_common(enumerate, true);
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--r", r)->required()->check(CLI::IsMember({2, 3}));
  enumerate->add_option("--method", method)->check(CLI::IsMember({"criterion", "bruteforce", "wanlidl"}));

  bool verify = false;
  auto* count = app.add_subcommand("count", "Closed-form count with bounds");
  add_common(count, true);
  count->add_option("--n", n)->required();
  count->add_option("--r", r)->required()->check(CLI::IsMember({2, 3}));
  count->add_flag("--verify", verify, "Also count by brute force");

  auto* bounds = app.add_subcommand("bounds", "Masuda-Zieve and r=3 corollary bounds");
  add_common(bounds, true);
  bounds->add_option("--r", r)->required()->check(CLI::Range(2U, 12U));

  std::uint64_t p = 0;
  auto* kappa = app.add_subcommand("kappa", "kappa_p and its cross-check");
  add_common(kappa, false);
  kappa->add_option("--p", p)->required();

  std::uint64_t k = 1;
  auto* trace = app.add_subcommand("trace", "s_k = pi_p^k + conj(pi_p)^k");
  add_common(trace, false);
  trace->add_option("--p", p)->required();
  trace->add_option("--k", k)->required();

  std::string coeff_a = "0", coeff_b = "inv4";
  bool do_count = false;
  auto* curve = app.add_subcommand("curve", "Point count of y^2 = x^3 + Ax + B");
  add_common(curve, false);
  curve->add_option("--p", p, "Prime field");
  curve->add_option("--field", opts.field, "Field as p or p^k");
  curve->add_option("--modulus", opts.modulus);
  curve->add_option("--A", coeff_a, "Integer encoding or inv4");
  curve->add_option("--B", coeff_b, "Integer encoding or inv4");
  curve->add_flag("--count", do_count, "Count points exhaustively");

  auto* chars = app.add_subcommand("char", "Quadratic and cubic character tables");
  add_common(chars, true);

  unsigned depth = 30;
  SharpnessOptions sharp_opts;
  auto* sharp = app.add_subcommand("sharpness", "Continued-fraction sharpness witnesses");
  add_common(sharp, false);
  sharp->add_option("--p", p)->required();
  sharp->add_option("--n", n)->required();
  sharp->add_option("--depth", depth, "Convergents per expansion");
  sharp->add_option("--max-k", sharp_opts.max_k, "Largest k evaluated exactly");
  sharp->add_option("--digits", sharp_opts.digits, "Fixed-point digits")->check(CLI::Range(40U, 1000U));

  SweepConfig sweep_cfg;
  std::vector<unsigned> sweep_r;
  std::vector<std::string> sweep_methods;
  auto* sweep = app.add_subcommand("sweep", "Verify closed forms against criterion and brute force");
  add_common(sweep, false);
  sweep->add_option("--q-max", sweep_cfg.q_max);
  sweep->add_option("--r", sweep_r)->check(CLI::IsMember({2, 3}));
  sweep->add_option("--method", sweep_methods)
      ->check(CLI::IsMember({"criterion", "bruteforce", "wanlidl"}));
  sweep->add_option("--jobs", opts.jobs);
  sweep->add_option("--brute-full-q-max", sweep_cfg.brute_full_q_max);
  sweep->add_option("--sample-rate", sweep_cfg.brute_sample_rate);
  sweep->add_option("--seed", sweep_cfg.seed);

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_option("--jobs", opts.jobs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    const ReportFormat format = parse_format(opts.format);
    const EnumerationGuard guard = guard_from(opts);

    if (*enumerate) {
      const FieldSpec spec = field_from(opts);
      const Method m = parse_method(method);
      const auto values = enumerate_perm_binomials(spec, n, r, m, guard);
      std::ostringstream out;
      if (format == ReportFormat::kJson) {
        Json j;
        j["q"] = spec.q();
        j["n"] = n;
        j["r"] = r;
        j["method"] = std::string(to_string(m));
        j["count"] = values.size();
        j["a_values"] = Json::array();
        for (FieldElement a : values) j["a_values"].push_back(a.code());
        out << json_line(j);
      } else if (format == ReportFormat::kCsv) {
        out << "a,polynomial\n";
        for (FieldElement a : values) out << a.code() << ',' << spec.format(a) << '\n';
      } else {
        out << "q=" << spec.q() << " n=" << n << " r=" << r << " method=" << to_string(m)
            << " count=" << values.size() << '\n';
        for (FieldElement a : values) out << "  a=" << spec.format(a) << '\n';
      }
      write_output(opts, out.str());
      return kExitOk;
    }

    if (*count) {
      const FieldSpec spec = field_from(opts);
      const CountReport rep = build_count_report(spec, n, r, true, verify, guard);
      const bool agree = (!rep.brute_count || BigInt(*rep.brute_count) == rep.closed_count) &&
                         (!rep.criterion_count || BigInt(*rep.criterion_count) == rep.closed_count);
      if (format == ReportFormat::kText) {
        std::ostringstream out;
        out << "q=" << rep.q << " n=" << rep.n << " r=" << rep.r << " closed=" << rep.closed_count
            << " criterion=" << rep.criterion_count.value_or(-1);
        if (rep.brute_count) out << " brute=" << *rep.brute_count;
        out << '\n';
        write_output(opts, out.str());
      } else {
        write_output(opts, json_line(to_json(rep)));
      }
      return agree ? kExitOk : kExitDisagreement;
    }

    if (*bounds) {
      const FieldSpec spec = field_from(opts);
      const SurdInterval mz = masuda_zieve_bounds(spec.q(), r);
      Json j;
      j["q"] = spec.q();
      j["r"] = r;
      j["mz_lower"] = mz.lower.str();
      j["mz_upper"] = mz.upper.str();
      j["mz_lower_approx"] = mz.lower.to_double();
      j["mz_upper_approx"] = mz.upper.to_double();
      j["mz_integer_lower"] = std::max<std::int64_t>(0, mz.lower.ceil());
      j["mz_integer_upper"] = mz.upper.floor();
      if (r == 3) {
        const IntInterval cor = corollary_bounds_r3(spec.q());
        j["cor_lower"] = cor.lower;
        j["cor_upper"] = cor.upper;
      }
      write_output(opts, json_line(j));
      return kExitOk;
    }

    if (*kappa) {
      write_output(opts, json_line(to_json(compute_kappa(p))));
      return kExitOk;
    }

    if (*trace) {
      Json j{{"p", p}, {"k", k}, {"s_k", pi_trace(p, k).str()}};
      write_output(opts, json_line(j));
      return kExitOk;
    }

    if (*curve) {
      if (opts.field.empty()) {
        if (p == 0) throw Error(ErrorCode::kInvalidArgument, "curve needs --p or --field");
        opts.field = std::to_string(p);
      }
      const FieldSpec spec = field_from(opts);
      const FieldElement A = parse_curve_coeff(spec, coeff_a);
      const FieldElement B = parse_curve_coeff(spec, coeff_b);
      Json j{{"q", spec.q()}, {"A", A.code()}, {"B", B.code()}};
      if (do_count) j["count"] = count_points_extension(spec, A, B, guard);
      if (spec.k() == 1 && spec.p() >= 5) j["binomial_sum_residue"] = point_count_residue(spec.p(), A.code(), B.code());
      write_output(opts, json_line(j));
      return kExitOk;
    }

    if (*chars) {
      const FieldSpec spec = field_from(opts);
      guard.check(spec.q());
      std::optional<CubicCharacter> eta;
      if (spec.q() % 3 == 1) eta.emplace(spec);
      std::ostringstream out;
      out << "a,chi,eta\n";
      for (std::uint64_t c = 0; c < spec.q(); ++c) {
        const FieldElement a{c};
        out << c << ',';
        if (spec.p() != 2) out << quadratic_char(spec, a).value;
        out << ',';
        if (eta) {
          const CubicCharValue v = (*eta)(a);
          if (v.is_zero()) {
            out << "zero";
          } else {
            out << 'E' << v.exponent();
          }
        }
        out << '\n';
      }
      write_output(opts, out.str());
      return kExitOk;
    }

    if (*sharp) {
      write_output(opts, json_line(to_json(sharpness_probe(p, n, depth, sharp_opts))));
      return kExitOk;
    }

    if (*sweep) {
      sweep_cfg.jobs = opts.jobs;
      sweep_cfg.guard = guard;
      if (!sweep_r.empty()) sweep_cfg.r_set = {sweep_r.begin(), sweep_r.end()};
      if (!sweep_methods.empty()) {
        sweep_cfg.methods.clear();
        for (const auto& m : sweep_methods) sweep_cfg.methods.insert(parse_method(m));
      }
      const SweepResult result = run_verify_sweep(sweep_cfg);
      write_output(opts, emit_report(result, format));
      return result.exit_code();
    }

    if (*selftest) {
      bool all = true;
      for (const auto& outcome : acceptance::run_all(opts.jobs)) {
        std::cout << outcome.line() << std::endl;
        all = all && outcome.passed;
      }
      return all ? kExitOk : kExitDisagreement;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.is_math_disagreement() ? kExitDisagreement : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
