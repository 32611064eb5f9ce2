#pragma once

// Machine-readable reports for the verification suites, plus the JSON
// serialization of the exact types.  JSON objects use sorted keys
// (std::map-backed); identical invocations produce byte-identical output.

#include "qkraw/corep.hpp"
#include "qkraw/laurent.hpp"
#include "qkraw/ncalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>

namespace qkraw {

using nlohmann::json;

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline json laurent_to_json(const LaurentScalar& s) {
  json j = json::object();
  for (const auto& [e, c] : s.terms()) j[std::to_string(e)] = rational_str(c);
  return j;
}

inline LaurentScalar laurent_from_json(const json& j) {
  LaurentScalar s;
  for (auto it = j.begin(); it != j.end(); ++it)
    s.add_term(std::stol(it.key()), parse_rational(it.value().get<std::string>()));
  return s;
}

/// Monomial key: nine digits, one exponent per generator in row-major
/// order.  Exponents above nine do not occur at the levels the CLI serves.
inline std::string monomial_key(const NCMonomial& m) {
  std::string s;
  for (int e : m) {
    if (e > 9) throw std::domain_error("monomial_key: exponent exceeds one digit");
    s += static_cast<char>('0' + e);
  }
  return s;
}

inline json ncpoly_to_json(const NCPoly& p) {
  json j = json::object();
  for (const auto& [m, c] : p.terms()) j[monomial_key(m)] = laurent_to_json(c);
  return j;
}

struct CheckResult {
  std::string description;
  bool exact = false;       // exact comparison (deviation must be identically 0)
  double max_deviation = 0.0;
  bool pass = false;
};

struct SuiteParams {
  long N = 2;
  Rational q = Rational(3, 5);
  long trunc = 24;
  double tol = 1e-10;
  uint64_t seed = 0;
  long count = 0;  // used by randomized suites
};

struct SuiteReport {
  std::string suite;
  SuiteParams params;
  std::vector<CheckResult> checks;

  bool overall_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
  }

  void add(std::string description, double deviation, double tol) {
    checks.push_back({std::move(description), false, deviation, deviation <= tol});
  }
  void add_exact(std::string description, bool equal) {
    checks.push_back({std::move(description), true, equal ? 0.0 : 1.0, equal});
  }

  json to_json() const {
    json checks_json = json::array();
    auto sorted = checks;
    std::sort(sorted.begin(), sorted.end(),
              [](const CheckResult& a, const CheckResult& b) {
                return a.description < b.description;
              });
    for (const auto& c : sorted)
      checks_json.push_back(json{{"description", c.description},
                                 {"exact", c.exact},
                                 {"max_deviation", c.max_deviation},
                                 {"pass", c.pass}});
    return json{{"suite", suite},
                {"params",
                 {{"N", params.N},
                  {"q", rational_str(params.q)},
                  {"trunc", params.trunc},
                  {"tol", params.tol},
                  {"seed", params.seed},
                  {"count", params.count}}},
                {"checks", checks_json},
                {"overall_pass", overall_pass()}};
  }

  std::string csv() const {
    auto sorted = checks;
    std::sort(sorted.begin(), sorted.end(),
              [](const CheckResult& a, const CheckResult& b) {
                return a.description < b.description;
              });
    std::string out = "description,exact,max_deviation,pass\n";
    for (const auto& c : sorted) {
      std::string desc = c.description;
      if (desc.find(',') != std::string::npos) desc = '"' + desc + '"';
      out += desc + ',' + (c.exact ? "true" : "false") + ',' +
             format_double(c.max_deviation) + ',' + (c.pass ? "true" : "false") +
             '\n';
    }
    return out;
  }
};

}  // namespace qkraw
