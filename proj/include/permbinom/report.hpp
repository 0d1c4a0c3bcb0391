#pragma once

#include <cstdio>
#include <sstream>
#include <string>

#include "json.hpp"

#include "permbinom/closed_form.hpp"
#include "permbinom/curves.hpp"
#include "permbinom/sharpness.hpp"
#include "permbinom/sweep.hpp"

namespace permbinom {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace detail

inline Json to_json(const CountReport& rep) {
  Json j;
  j["q"] = rep.q;
  j["p"] = rep.p;
  j["k"] = rep.k;
  j["n"] = rep.n;
  j["r"] = rep.r;
  j["epsilon1"] = rep.eps ? Json(rep.eps->e1) : Json(nullptr);
  j["epsilon2"] = rep.eps ? Json(rep.eps->e2) : Json(nullptr);
  j["s_k"] = rep.s_k ? Json(rep.s_k->str()) : Json(nullptr);
  j["closed_count"] = rep.closed_count.str();
  j["criterion_count"] = rep.criterion_count ? Json(*rep.criterion_count) : Json(nullptr);
  j["brute_count"] = rep.brute_count ? Json(*rep.brute_count) : Json(nullptr);
  j["mz_lower"] = rep.mz.lower.str();
  j["mz_upper"] = rep.mz.upper.str();
  j["mz_lower_approx"] = detail::fixed6(rep.mz.lower.to_double());
  j["mz_upper_approx"] = detail::fixed6(rep.mz.upper.to_double());
  j["cor_lower"] = rep.cor ? Json(rep.cor->lower) : Json(nullptr);
  j["cor_upper"] = rep.cor ? Json(rep.cor->upper) : Json(nullptr);
  if (!rep.a_values.empty() || rep.criterion_count) j["a_values"] = rep.a_values;
  return j;
}

inline Json to_json(const KappaRecord& rec) {
  return Json{{"p", rec.p},
              {"kappa", rec.kappa},
              {"residue", rec.residue},
              {"curve_count", rec.curve_count}};
}

inline Json to_json(const SharpnessProbe& probe) {
  Json j;
  j["p"] = probe.p;
  j["kappa"] = probe.kappa;
  j["theta"] = probe.theta.str(50, std::ios_base::fixed);
  j["convergents"] = Json::array();
  for (const auto& c : probe.convergents) {
    j["convergents"].push_back(
        {{"source", c.source}, {"m", c.numerator.str()}, {"n", c.denominator.str()}});
  }
  j["findings"] = Json::array();
  for (const auto& f : probe.findings) {
    j["findings"].push_back({{"k", f.k},
                             {"epsilon1", f.eps.e1},
                             {"epsilon2", f.eps.e2},
                             {"deviation", f.deviation.str()},
                             {"gcd_ok", f.gcd_ok},
                             {"cos_check", f.cos_check}});
  }
  return j;
}

inline constexpr const char* kSweepCsvHeader =
    "q,p,k,n,r,closed_count,criterion_count,brute_count,epsilon1,epsilon2,s_k,"
    "mz_lower,mz_upper,cor_lower,cor_upper,status";

inline bool cell_failed(const SweepResult& result, const CountReport& cell) {
  for (const auto& f : result.failures) {
    if (f.q == cell.q && f.n == cell.n && f.r == cell.r) return true;
  }
  return false;
}

/// Serializes a sweep. Field order is fixed; big integers are decimal strings.
inline std::string emit_report(const SweepResult& result, ReportFormat format) {
  std::ostringstream out;
  auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string(); };
  switch (format) {
    case ReportFormat::kJson: {
      Json j;
      j["cells"] = Json::array();
      for (const auto& c : result.cells) j["cells"].push_back(to_json(c));
      j["failures"] = Json::array();
      for (const auto& f : result.failures) {
        j["failures"].push_back({{"q", f.q},
                                 {"n", f.n},
                                 {"r", f.r},
                                 {"route_a", f.route_a},
                                 {"route_b", f.route_b},
                                 {"diff", f.diff}});
      }
      j["elapsed_ms"] = result.elapsed.count();
      out << j.dump() << '\n';
      break;
    }
    case ReportFormat::kCsv:
      out << kSweepCsvHeader << '\n';
      for (const auto& c : result.cells) {
        out << c.q << ',' << c.p << ',' << c.k << ',' << c.n << ',' << c.r << ','
            << c.closed_count.str() << ',' << opt(c.criterion_count) << ',' << opt(c.brute_count)
            << ',' << (c.eps ? std::to_string(c.eps->e1) : "") << ','
            << (c.eps ? std::to_string(c.eps->e2) : "") << ',' << (c.s_k ? c.s_k->str() : "")
            << ',' << detail::fixed6(c.mz.lower.to_double()) << ','
            << detail::fixed6(c.mz.upper.to_double()) << ','
            << (c.cor ? std::to_string(c.cor->lower) : "") << ','
            << (c.cor ? std::to_string(c.cor->upper) : "") << ','
            << (cell_failed(result, c) ? "fail" : "ok") << '\n';
      }
      break;
    case ReportFormat::kText:
      out << "cells: " << result.cells.size() << "  failures: " << result.failures.size()
          << "  elapsed_ms: " << result.elapsed.count() << '\n';
      for (const auto& f : result.failures) {
        out << "FAIL q=" << f.q << " n=" << f.n << " r=" << f.r << " " << f.route_a << " vs "
            << f.route_b << ": " << f.diff << '\n';
      }
      break;
  }
  return out.str();
}

}  // namespace permbinom
