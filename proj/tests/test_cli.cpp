#include "qkraw/report.hpp"
#include "qkraw/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <fstream>

using namespace qkraw;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(QKRAW_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

// minimal validator for the draft-07 subset used by the shipped schema:
// type / required / properties / items
bool validate(const json& schema, const json& value) {
  if (schema.contains("type")) {
    const std::string t = schema["type"];
    if (t == "object" && !value.is_object()) return false;
    if (t == "array" && !value.is_array()) return false;
    if (t == "string" && !value.is_string()) return false;
    if (t == "boolean" && !value.is_boolean()) return false;
    if (t == "integer" && !value.is_number_integer()) return false;
    if (t == "number" && !value.is_number()) return false;
  }
  if (schema.contains("required"))
    for (const auto& key : schema["required"])
      if (!value.contains(key.get<std::string>())) return false;
  if (schema.contains("properties") && value.is_object())
    for (auto it = schema["properties"].begin(); it != schema["properties"].end();
         ++it)
      if (value.contains(it.key()) && !validate(it.value(), value[it.key()]))
        return false;
  if (schema.contains("items") && value.is_array())
    for (const auto& el : value)
      if (!validate(schema["items"], el)) return false;
  return true;
}

}  // namespace

TEST_CASE("Laurent JSON round-trips bit-exactly") {
  LaurentScalar s;
  s.add_term(-3, Rational(22, 7));
  s.add_term(0, Rational(-5, 3));
  s.add_term(11, Rational(1));
  json j = laurent_to_json(s);
  LaurentScalar back = laurent_from_json(j);
  REQUIRE(back == s);
  REQUIRE(laurent_to_json(back).dump() == j.dump());
  REQUIRE(j["-3"] == "22/7");
  // empty polynomial
  REQUIRE(laurent_from_json(laurent_to_json(LaurentScalar::zero())).is_zero());
}

TEST_CASE("report JSON and CSV emission") {
  SuiteReport rep;
  rep.suite = "demo";
  rep.params.q = Rational(3, 5);
  // empty report: checks emit as [] and CSV is header-only
  json j = rep.to_json();
  REQUIRE(j["checks"].dump() == "[]");
  REQUIRE(rep.csv() == "description,exact,max_deviation,pass\n");
  // populated report: checks come out sorted by description
  rep.add("zeta check", 1e-12, 1e-10);
  rep.add_exact("alpha check", true);
  j = rep.to_json();
  REQUIRE(j["checks"][0]["description"] == "alpha check");
  REQUIRE(j["checks"][1]["description"] == "zeta check");
  REQUIRE(j["overall_pass"] == true);
  REQUIRE(j["params"]["q"] == "3/5");
  std::string csv = rep.csv();
  REQUIRE(csv.find("description,exact,max_deviation,pass\n") == 0);
  REQUIRE(csv.find("alpha check") < csv.find("zeta check"));
  // floats carry 17 significant digits
  REQUIRE(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("report schema validation") {
  std::ifstream f(QKRAW_SCHEMA_PATH);
  REQUIRE(f.good());
  json schema = json::parse(f);
  SuiteParams p;
  p.N = 1;
  SuiteReport rep = verify::suite_oracle_h(p);
  REQUIRE(validate(schema, rep.to_json()));
  // a broken report must fail validation
  json bad = rep.to_json();
  bad.erase("overall_pass");
  REQUIRE_FALSE(validate(schema, bad));
  json bad2 = rep.to_json();
  bad2["checks"][0]["pass"] = "yes";
  REQUIRE_FALSE(validate(schema, bad2));
}

TEST_CASE("cli: normal-order emits canonical JSON") {
  auto r = run_cli("alg normal-order x12 x11 --json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j.size() == 1);
  REQUIRE(j["110000000"]["-1"] == "1/1");
  // relation with a correction term
  r = run_cli("alg normal-order x22 x11");
  REQUIRE(r.exit_code == 0);
  j = json::parse(r.out);
  REQUIRE(j.size() == 2);
  REQUIRE(j["100010000"]["0"] == "1/1");
  REQUIRE(j["010100000"]["-1"] == "1/1");
  REQUIRE(j["010100000"]["1"] == "-1/1");
  // bad token is a parameter error
  r = run_cli("alg normal-order x41");
  REQUIRE(r.exit_code == 2);
}

TEST_CASE("cli: algebra structure maps") {
  // coproduct of a generator has the three path terms
  auto r = run_cli("alg coproduct x11");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j.size() == 3);
  REQUIRE(j["100000000|100000000"]["0"] == "1/1");
  // counit keeps only diagonal monomials
  r = run_cli("alg counit x11 x22");
  REQUIRE(json::parse(r.out)["0"] == "1/1");
  r = run_cli("alg counit x12");
  REQUIRE(json::parse(r.out).empty());
  // quantum minor and determinant
  r = run_cli("alg minor --i 3 --j 3");
  j = json::parse(r.out);
  REQUIRE(j["100010000"]["0"] == "1/1");
  REQUIRE(j["010100000"]["1"] == "-1/1");
  r = run_cli("alg det");
  REQUIRE(json::parse(r.out).size() == 6);
  // antipode of x12 is -(1/q) times the (2,1) minor
  r = run_cli("alg antipode x12");
  j = json::parse(r.out);
  REQUIRE(j["010000001"]["-1"] == "-1/1");
  REQUIRE(j["001000010"]["0"] == "1/1");
  // right comodule element and the coaction expansion
  r = run_cli("corep matel-right --N 1 --m 0,1,0 --n 1,0,0");
  REQUIRE(json::parse(r.out)["h"]["010000000"]["0"] == "1/1");
  r = run_cli("corep coact --m 1,0,0");
  j = json::parse(r.out);
  REQUIRE(j.size() == 3);
  REQUIRE(j["0,1,0"]["010000000"]["0"] == "1/1");
}

TEST_CASE("cli: corep matel") {
  auto r = run_cli("corep matel --N 2 --m 2,0,0 --n 1,1,0 --normalized --q 3/5");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["h"]["110000000"]["-2"] == "1/1");
  REQUIRE(j["h"]["110000000"]["0"] == "1/1");
  REQUIRE(j.contains("factor"));
  double f = std::stod(j["factor"].get<std::string>());
  REQUIRE(f == Catch::Approx(t_norm_factor(2, {2, 0, 0}, {1, 1, 0}, Rational(3, 5)))
                   .epsilon(1e-15));
  REQUIRE(run_cli("corep matel --N 2 --m 1,0,0 --n 1,1,0").exit_code == 2);
}

TEST_CASE("cli: rep apply matches the bivariate scalar") {
  auto r = run_cli(
      "rep apply --word 21 --N 2 --m 1,1,0 --n 0,1,1 --state 5,7 --q 0.6 "
      "--trunc 32");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  Cplx s = bi_shift_scalar(1, 1, 0, 1, 2, 5, 7, 0.6);
  REQUIRE(j.size() == 1);
  // target state (u - m2 + N - n1 - n2, v + n2 - m1) = (5, 7)
  auto arr = j["5,7"];
  REQUIRE(std::abs(arr[0].get<double>() - s.real()) < 1e-12);
  REQUIRE(std::abs(arr[1].get<double>()) < 1e-14);
  // state outside the safe window
  REQUIRE(run_cli("rep apply --word 21 --N 2 --m 1,1,0 --n 0,1,1 --state 31,7 "
                  "--q 0.6 --trunc 32")
              .exit_code == 2);
}

TEST_CASE("cli: poly and series values") {
  auto r = run_cli("poly wall --v 0 --w 0 --s 0 --q 0.5 --json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j.contains("value"));
  REQUIRE(j.contains("imag_residual"));
  REQUIRE(j["value"].get<double>() ==
          Catch::Approx(wall_pbar(0, 0, 0, 0.5).real()).epsilon(1e-15));
  r = run_cli("series qbinom --n 2 --k 1 --exact");
  REQUIRE(r.exit_code == 0);
  j = json::parse(r.out);
  REQUIRE(j["0"] == "1/1");
  REQUIRE(j["1"] == "1/1");
  r = run_cli("series pochhammer --a 0.3 --n 3 --q 0.5");
  REQUIRE(r.exit_code == 0);
  REQUIRE(std::stod(r.out) == Catch::Approx(0.550375).epsilon(1e-15));
  // q outside (0,1) is a parameter error
  REQUIRE(run_cli("poly kraw1 --n 1 --x 1 --p-exp -2 --N 2 --q 1.5").exit_code == 2);
}

TEST_CASE("cli: verify exit codes and determinism") {
  auto r1 = run_cli("verify confluence --count 60 --seed 9 --json");
  REQUIRE(r1.exit_code == 0);
  auto r2 = run_cli("verify confluence --count 60 --seed 9 --json");
  REQUIRE(r2.out == r1.out);
  json j = json::parse(r1.out);
  REQUIRE(j["suite"] == "confluence");
  REQUIRE(j["overall_pass"] == true);
  REQUIRE(j["params"]["seed"] == 9);
  // unknown suite -> 2
  REQUIRE(run_cli("verify nonsense").exit_code == 2);
  // an unreachable tolerance makes the suite fail -> 1
  REQUIRE(run_cli("verify dual-orth --N 1 --tol 1e-30").exit_code == 1);
  // csv output has the header
  auto rc = run_cli("verify oracle-h --N 1 --csv");
  REQUIRE(rc.exit_code == 0);
  REQUIRE(rc.out.find("description,exact,max_deviation,pass\n") == 0);
  // rational and decimal q give identical bytes
  auto ra = run_cli("verify dual-orth --N 1 --q 3/5 --json");
  auto rb = run_cli("verify dual-orth --N 1 --q 0.6 --json");
  REQUIRE(ra.out == rb.out);
}

TEST_CASE("cli: hexagon and comodule suites pass quickly") {
  REQUIRE(run_cli("verify comodule --N 1").exit_code == 0);
  REQUIRE(run_cli("verify hexagon --trunc 10 --tol 1e-10").exit_code == 0);
}
