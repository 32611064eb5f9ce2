// qkraw: evaluation and verification front end for the quantum-matrix
// algebra, corepresentation matrix elements, q-Krawtchouk and Wall
// polynomial layers.
//
// Exit codes: 0 success / suite passed, 1 suite failed, 2 parameter or
// usage error.

#include "qkraw/qpoly.hpp"
#include "qkraw/report.hpp"
#include "qkraw/reps.hpp"
#include "qkraw/verify.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace qkraw;

namespace {

std::array<long, 3> parse_triple(const std::string& s) {
  std::array<long, 3> out{};
  std::stringstream ss(s);
  std::string tok;
  int i = 0;
  while (std::getline(ss, tok, ',')) {
    if (i >= 3) throw std::invalid_argument("expected three comma-separated integers");
    out[static_cast<size_t>(i++)] = std::stol(tok);
  }
  if (i != 3) throw std::invalid_argument("expected three comma-separated integers");
  return out;
}

std::vector<long> parse_state(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stol(tok));
  return out;
}

std::vector<int> parse_word(const std::string& s) {
  std::vector<int> word;
  for (char c : s) {
    if (c != '1' && c != '2')
      throw std::invalid_argument("word letters must be 1 or 2");
    word.push_back(c - '0');
  }
  if (word.empty()) throw std::invalid_argument("empty word");
  return word;
}

void emit_value(Cplx v, bool as_json) {
  if (as_json) {
    json j{{"value", v.real()}, {"imag_residual", std::abs(v.imag())}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << format_double(v.real()) << "\n";
  }
}

std::string state_key(const std::vector<long>& ks) {
  std::string s;
  for (size_t i = 0; i < ks.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(ks[i]);
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum-matrix algebra and q-Krawtchouk verification tool"};
  app.require_subcommand(1);

  std::string q_str = "0.6";
  long trunc = 24;
  double tol = 1e-10;
  bool as_json = false;
  app.add_option("--q", q_str, "base point q as a rational or decimal in (0,1)")
      ->capture_default_str();
  app.add_option("--trunc", trunc, "basis truncation per tensor leg")
      ->capture_default_str();
  app.add_option("--tol", tol, "comparison tolerance")->capture_default_str();
  app.add_flag("--json", as_json, "machine-readable JSON output");

  // ---- series -------------------------------------------------------
  auto* series = app.add_subcommand("series", "q-series building blocks");
  series->require_subcommand(1);

  auto* poch = series->add_subcommand("pochhammer", "q-Pochhammer symbol");
  long poch_a_exp = 0, poch_step = 1, poch_n = 0;
  double poch_a = 0.0;
  bool poch_exact = false, poch_inf_flag = false;
  poch->add_option("--a-exp", poch_a_exp, "exact mode: a = q^{a-exp}");
  poch->add_option("--step-exp", poch_step, "exact mode: base = q^{step-exp}");
  poch->add_option("--a", poch_a, "numeric mode: the parameter a");
  poch->add_option("--n", poch_n, "number of factors");
  poch->add_flag("--exact", poch_exact, "exact Laurent output (a = q^{a-exp})");
  poch->add_flag("--inf", poch_inf_flag, "infinite product (numeric only)");

  auto* qbin = series->add_subcommand("qbinom", "Gaussian binomial coefficient");
  long qb_n = 0, qb_k = 0, qb_base = 1;
  bool qb_exact = false;
  qbin->add_option("--n", qb_n)->required();
  qbin->add_option("--k", qb_k)->required();
  qbin->add_option("--base-exp", qb_base, "exact mode: base = q^{base-exp}");
  qbin->add_flag("--exact", qb_exact, "exact Laurent output");

  auto* qmul = series->add_subcommand("qmultinom", "Gaussian trinomial coefficient");
  long qm_N = 0, qm_base = 1;
  std::string qm_m;
  bool qm_exact = false;
  qmul->add_option("--N", qm_N)->required();
  qmul->add_option("--m", qm_m, "parts as a,b,c")->required();
  qmul->add_option("--base-exp", qm_base);
  qmul->add_flag("--exact", qm_exact);

  auto* phi = series->add_subcommand("phi21", "terminating basic hypergeometric sum");
  long ph_alpha = 0, ph_beta = 0, ph_gamma = 0;
  double ph_z = 0.0;
  phi->add_option("--alpha-exp", ph_alpha, "upper parameter q^{alpha-exp}, must be -n")
      ->required();
  phi->add_option("--beta-exp", ph_beta)->required();
  phi->add_option("--gamma-exp", ph_gamma)->required();
  phi->add_option("--z", ph_z)->required();

  // ---- poly ---------------------------------------------------------
  auto* poly = app.add_subcommand("poly", "q-Krawtchouk and Wall polynomials");
  poly->require_subcommand(1);

  auto* k1 = poly->add_subcommand("kraw1", "univariate quantum q-Krawtchouk");
  long k1_n = 0, k1_x = 0, k1_N = 0, k1_pexp = 0;
  k1->add_option("--n", k1_n)->required();
  k1->add_option("--x", k1_x)->required();
  k1->add_option("--p-exp", k1_pexp, "parameter p = q^{p-exp}")->required();
  k1->add_option("--N", k1_N)->required();

  auto* k1w = poly->add_subcommand("kraw1-weight", "univariate weight (square root)");
  long k1w_x = 0, k1w_N = 0, k1w_pexp = 0;
  k1w->add_option("--x", k1w_x)->required();
  k1w->add_option("--p-exp", k1w_pexp)->required();
  k1w->add_option("--N", k1w_N)->required();

  auto* k1n = poly->add_subcommand("kraw1-norm", "univariate normalization");
  long k1n_n = 0, k1n_N = 0, k1n_pexp = 0;
  k1n->add_option("--n", k1n_n)->required();
  k1n->add_option("--p-exp", k1n_pexp)->required();
  k1n->add_option("--N", k1n_N)->required();

  auto* k2 = poly->add_subcommand("kraw2", "bivariate polynomial of Tratnik type");
  long k2_n = 0, k2_m = 0, k2_x = 0, k2_y = 0, k2_u = 0, k2_v = 0, k2_N = 0;
  k2->add_option("--n", k2_n)->required();
  k2->add_option("--m", k2_m)->required();
  k2->add_option("--x", k2_x)->required();
  k2->add_option("--y", k2_y)->required();
  k2->add_option("--u-exp", k2_u)->required();
  k2->add_option("--v-exp", k2_v)->required();
  k2->add_option("--N", k2_N)->required();

  auto* k2w = poly->add_subcommand("kraw2-weight", "bivariate weight");
  long k2w_n1 = 0, k2w_n2 = 0, k2w_u = 0, k2w_v = 0, k2w_N = 0;
  k2w->add_option("--n1", k2w_n1)->required();
  k2w->add_option("--n2", k2w_n2)->required();
  k2w->add_option("--u", k2w_u)->required();
  k2w->add_option("--v", k2w_v)->required();
  k2w->add_option("--N", k2w_N)->required();

  auto* k2n = poly->add_subcommand("kraw2-norm", "bivariate normalization");
  long k2n_m1 = 0, k2n_m2 = 0, k2n_u = 0, k2n_v = 0, k2n_N = 0;
  k2n->add_option("--m1", k2n_m1)->required();
  k2n->add_option("--m2", k2n_m2)->required();
  k2n->add_option("--u", k2n_u)->required();
  k2n->add_option("--v", k2n_v)->required();
  k2n->add_option("--N", k2n_N)->required();

  auto* wallc = poly->add_subcommand("wall", "weighted normalized Wall polynomial");
  long wl_v = 0, wl_w = 0, wl_s = 0;
  wallc->add_option("--v", wl_v)->required();
  wallc->add_option("--w", wl_w)->required();
  wallc->add_option("--s", wl_s)->required();

  auto* us = poly->add_subcommand("uni-scalar", "univariate shift-operator scalar");
  long us_m = 0, us_n = 0, us_T = 0, us_k = 0;
  us->add_option("--m", us_m)->required();
  us->add_option("--n", us_n)->required();
  us->add_option("--T", us_T)->required();
  us->add_option("--k", us_k)->required();

  auto* bs = poly->add_subcommand("bi-scalar", "bivariate shift-operator scalar");
  long bs_m1 = 0, bs_m2 = 0, bs_n1 = 0, bs_n2 = 0, bs_N = 0, bs_u = 0, bs_v = 0;
  bs->add_option("--m1", bs_m1)->required();
  bs->add_option("--m2", bs_m2)->required();
  bs->add_option("--n1", bs_n1)->required();
  bs->add_option("--n2", bs_n2)->required();
  bs->add_option("--N", bs_N)->required();
  bs->add_option("--u", bs_u)->required();
  bs->add_option("--v", bs_v)->required();

  auto* cc = poly->add_subcommand("coeff-c", "Wall product identity coefficient");
  long cc_m1 = 0, cc_m2 = 0, cc_n1 = 0, cc_n2 = 0, cc_j = 0, cc_N = 0, cc_u = 0,
       cc_v = 0, cc_w = 0, cc_t = 0;
  cc->add_option("--m1", cc_m1)->required();
  cc->add_option("--m2", cc_m2)->required();
  cc->add_option("--n1", cc_n1)->required();
  cc->add_option("--n2", cc_n2)->required();
  cc->add_option("--j", cc_j)->required();
  cc->add_option("--N", cc_N)->required();
  cc->add_option("--u", cc_u)->required();
  cc->add_option("--v", cc_v)->required();
  cc->add_option("--w", cc_w)->required();
  cc->add_option("--t", cc_t)->required();

  // ---- alg ----------------------------------------------------------
  auto* alg = app.add_subcommand("alg", "quantum matrix algebra");
  alg->require_subcommand(1);
  auto* norm = alg->add_subcommand("normal-order", "reduce a generator word");
  std::vector<std::string> norm_word;
  norm->add_option("tokens", norm_word, "generators like x11 x23 ...");

  auto* cop = alg->add_subcommand("coproduct", "coproduct of a generator word");
  std::vector<std::string> cop_word;
  cop->add_option("tokens", cop_word, "generators like x11 x23 ...");

  auto* cou = alg->add_subcommand("counit", "counit of a generator word");
  std::vector<std::string> cou_word;
  cou->add_option("tokens", cou_word, "generators like x11 x23 ...");

  auto* minorc = alg->add_subcommand("minor", "quantum minor at a position");
  long mi_i = 1, mi_j = 1;
  minorc->add_option("--i", mi_i)->required();
  minorc->add_option("--j", mi_j)->required();

  auto* detc = alg->add_subcommand("det", "quantum determinant");

  auto* antip = alg->add_subcommand("antipode", "formal minor map of a word");
  std::vector<std::string> antip_word;
  antip->add_option("tokens", antip_word, "generators like x11 x23 ...");

  auto* starc = alg->add_subcommand("star", "star of a generator");
  long st_i = 1, st_j = 1;
  starc->add_option("--i", st_i)->required();
  starc->add_option("--j", st_j)->required();

  // ---- corep --------------------------------------------------------
  auto* corepc = app.add_subcommand("corep", "corepresentation matrix elements");
  corepc->require_subcommand(1);
  auto* matel = corepc->add_subcommand("matel", "matrix element h or t");
  long me_N = 0;
  std::string me_m, me_n;
  bool me_norm = false;
  matel->add_option("--N", me_N)->required();
  matel->add_option("--m", me_m, "row index a,b,c")->required();
  matel->add_option("--n", me_n, "column index a,b,c")->required();
  matel->add_flag("--normalized", me_norm, "include the unitary normalization");

  auto* matelr = corepc->add_subcommand("matel-right", "right-comodule matrix element");
  long mr_N = 0;
  std::string mr_m, mr_n;
  matelr->add_option("--N", mr_N)->required();
  matelr->add_option("--m", mr_m)->required();
  matelr->add_option("--n", mr_n)->required();

  auto* coact = corepc->add_subcommand("coact", "coaction expansion of a basis monomial");
  std::string co_m;
  coact->add_option("--m", co_m, "exponents a,b,c")->required();

  // ---- rep ----------------------------------------------------------
  auto* repc = app.add_subcommand("rep", "representation evaluation");
  repc->require_subcommand(1);
  auto* apply = repc->add_subcommand("apply", "apply a matrix element to a state");
  std::string ap_word, ap_m, ap_n, ap_state;
  long ap_N = 0;
  apply->add_option("--word", ap_word, "representation word over {1,2}")->required();
  apply->add_option("--N", ap_N)->required();
  apply->add_option("--m", ap_m)->required();
  apply->add_option("--n", ap_n)->required();
  apply->add_option("--state", ap_state, "input state k1,k2,...")->required();

  // ---- verify -------------------------------------------------------
  auto* ver = app.add_subcommand("verify", "run a named verification suite");
  std::string suite_name;
  long ver_N = -1;
  uint64_t ver_seed = 0;
  long ver_count = 0;
  bool ver_csv = false;
  ver->add_option("suite", suite_name,
                  "one of: uni-match bi-match unitarity hexagon comodule "
                  "dual-orth wall-identity oracle-h confluence")
      ->required();
  ver->add_option("--N", ver_N, "maximum level (suite-specific default)");
  ver->add_option("--seed", ver_seed, "seed for randomized suites")
      ->capture_default_str();
  ver->add_option("--count", ver_count, "sample count for randomized suites");
  ver->add_flag("--csv", ver_csv, "CSV report");

  // allow the global flags (--q, --trunc, --tol, --json) after any
  // subcommand
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    for (auto* sub : a->get_subcommands([](CLI::App*) { return true; })) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);

    Rational q0 = parse_rational(q_str);
    if (!(q0 > 0 && q0 < 1))
      throw std::invalid_argument("--q must lie in the open interval (0,1)");
    double q = static_cast<double>(q0);

    // series
    if (poch->parsed()) {
      if (poch_exact) {
        if (poch_inf_flag)
          throw std::invalid_argument(
              "infinite q-Pochhammer products are numeric-only");
        json j = laurent_to_json(qpoch_exact(poch_a_exp, poch_step, poch_n));
        std::cout << j.dump() << "\n";
      } else {
        Cplx a = poch->count("--a") ? Cplx(poch_a)
                                    : qpow(Cplx(q), poch_a_exp);
        Cplx v = poch_inf_flag ? qpoch_inf(a, q) : qpoch(a, q, poch_n);
        emit_value(v, as_json);
      }
      return 0;
    }
    if (qbin->parsed()) {
      if (qb_exact) {
        std::cout << laurent_to_json(gauss_binomial(qb_n, qb_k, qb_base)).dump()
                  << "\n";
      } else {
        emit_value(q_binomial(qb_n, qb_k, std::pow(q, double(qb_base))), as_json);
      }
      return 0;
    }
    if (qmul->parsed()) {
      auto m = parse_triple(qm_m);
      if (qm_exact) {
        std::cout << laurent_to_json(gauss_multinomial(qm_N, m, qm_base)).dump()
                  << "\n";
      } else {
        emit_value(q_multinomial(qm_N, m, std::pow(q, double(qm_base))), as_json);
      }
      return 0;
    }
    if (phi->parsed()) {
      emit_value(phi21_terminating(ph_alpha, ph_beta, ph_gamma, q, ph_z), as_json);
      return 0;
    }

    // poly
    if (k1->parsed()) {
      emit_value(kraw1(k1_n, k1_x, qpow(Cplx(q), k1_pexp), k1_N, q), as_json);
      return 0;
    }
    if (k1w->parsed()) {
      emit_value(kraw1_weight(k1w_x, qpow(Cplx(q), k1w_pexp), k1w_N, q), as_json);
      return 0;
    }
    if (k1n->parsed()) {
      emit_value(kraw1_norm(k1n_n, qpow(Cplx(q), k1n_pexp), k1n_N, q), as_json);
      return 0;
    }
    if (k2->parsed()) {
      emit_value(kraw2_tratnik(k2_n, k2_m, k2_x, k2_y, k2_u, k2_v, k2_N, q),
                 as_json);
      return 0;
    }
    if (k2w->parsed()) {
      emit_value(kraw2_weight(k2w_n1, k2w_n2, k2w_u, k2w_v, k2w_N, q), as_json);
      return 0;
    }
    if (k2n->parsed()) {
      emit_value(kraw2_norm(k2n_m1, k2n_m2, k2n_u, k2n_v, k2n_N, q), as_json);
      return 0;
    }
    if (wallc->parsed()) {
      emit_value(wall_pbar(wl_v, wl_w, wl_s, q), as_json);
      return 0;
    }
    if (us->parsed()) {
      emit_value(uni_shift_scalar(us_m, us_n, us_T, us_k, q), as_json);
      return 0;
    }
    if (bs->parsed()) {
      emit_value(bi_shift_scalar(bs_m1, bs_m2, bs_n1, bs_n2, bs_N, bs_u, bs_v, q),
                 as_json);
      return 0;
    }
    if (cc->parsed()) {
      emit_value(coeff_C(cc_m1, cc_m2, cc_n1, cc_n2, cc_j, cc_N, cc_u, cc_v,
                         cc_w, cc_t, q),
                 as_json);
      return 0;
    }

    // alg
    auto parse_gens = [](const std::vector<std::string>& tokens) {
      std::vector<GeneratorIdx> word;
      for (const auto& tok : tokens) {
        if (tok.size() != 3 || tok[0] != 'x' || tok[1] < '1' || tok[1] > '3' ||
            tok[2] < '1' || tok[2] > '3')
          throw std::invalid_argument("bad generator token: " + tok);
        word.emplace_back(tok[1] - '0', tok[2] - '0');
      }
      return word;
    };
    if (norm->parsed()) {
      std::cout << ncpoly_to_json(normal_order_word(parse_gens(norm_word))).dump()
                << "\n";
      return 0;
    }
    if (cop->parsed()) {
      TensorNCPoly d = coproduct(normal_order_word(parse_gens(cop_word)));
      json j = json::object();
      for (const auto& [k, c] : d.terms())
        j[monomial_key(k.first) + "|" + monomial_key(k.second)] =
            laurent_to_json(c);
      std::cout << j.dump() << "\n";
      return 0;
    }
    if (cou->parsed()) {
      std::cout << laurent_to_json(counit(normal_order_word(parse_gens(cou_word))))
                       .dump()
                << "\n";
      return 0;
    }
    if (minorc->parsed()) {
      std::cout << ncpoly_to_json(quantum_minor(static_cast<int>(mi_i),
                                                static_cast<int>(mi_j)))
                       .dump()
                << "\n";
      return 0;
    }
    if (detc->parsed()) {
      std::cout << ncpoly_to_json(quantum_det()).dump() << "\n";
      return 0;
    }
    if (antip->parsed()) {
      std::cout << ncpoly_to_json(antipode(normal_order_word(parse_gens(antip_word))))
                       .dump()
                << "\n";
      return 0;
    }
    if (starc->parsed()) {
      std::cout << ncpoly_to_json(star_generator(static_cast<int>(st_i),
                                                 static_cast<int>(st_j)))
                       .dump()
                << "\n";
      return 0;
    }

    // corep
    if (matel->parsed()) {
      auto m = parse_triple(me_m), n = parse_triple(me_n);
      NCPoly h = h_element(me_N, m, n);
      json j{{"h", ncpoly_to_json(h)}};
      if (me_norm)
        j["factor"] = format_double(t_norm_factor(me_N, m, n, q0));
      std::cout << j.dump() << "\n";
      return 0;
    }
    if (matelr->parsed()) {
      NCPoly h = h_right_element(mr_N, parse_triple(mr_m), parse_triple(mr_n));
      std::cout << json{{"h", ncpoly_to_json(h)}}.dump() << "\n";
      return 0;
    }
    if (coact->parsed()) {
      auto m = parse_triple(co_m);
      json j = json::object();
      for (const auto& [n, poly] : coaction_expand(m))
        j[std::to_string(n[0]) + "," + std::to_string(n[1]) + "," +
          std::to_string(n[2])] = ncpoly_to_json(poly);
      std::cout << j.dump() << "\n";
      return 0;
    }

    // rep
    if (apply->parsed()) {
      auto word = parse_word(ap_word);
      auto out = apply_matrix_element(word, ap_N, parse_triple(ap_m),
                                      parse_triple(ap_n), parse_state(ap_state),
                                      trunc, q0);
      json j = json::object();
      for (const auto& [state, v] : out)
        j[state_key(state)] = json::array({v.real(), v.imag()});
      std::cout << j.dump() << "\n";
      return 0;
    }

    // verify
    if (ver->parsed()) {
      SuiteParams p;
      p.q = q0;
      p.trunc = trunc;
      p.seed = ver_seed;
      p.count = ver_count;
      p.tol = tol;
      bool tol_set = app.count("--tol") > 0;
      bool trunc_set = app.count("--trunc") > 0;
      // suite-specific defaults where the generic ones do not fit
      if (suite_name == "uni-match") {
        p.N = ver_N >= 0 ? ver_N : 4;
      } else if (suite_name == "bi-match") {
        p.N = ver_N >= 0 ? ver_N : 3;
        if (!tol_set) p.tol = 1e-9;
        if (!trunc_set) p.trunc = 32;
      } else if (suite_name == "unitarity") {
        p.N = ver_N >= 0 ? ver_N : 2;
        if (!tol_set) p.tol = 1e-9;
      } else if (suite_name == "dual-orth") {
        p.N = ver_N >= 0 ? ver_N : 3;
        if (!tol_set) p.tol = 1e-8;
      } else if (suite_name == "wall-identity") {
        p.N = ver_N >= 0 ? ver_N : 2;
        if (!tol_set) p.tol = 1e-8;
      } else if (suite_name == "oracle-h") {
        p.N = ver_N >= 0 ? ver_N : 3;
      } else if (suite_name == "hexagon") {
        p.N = ver_N >= 0 ? ver_N : 2;
        if (!trunc_set) p.trunc = 16;
      } else {
        p.N = ver_N >= 0 ? ver_N : 2;
      }
      SuiteReport rep = verify::run_suite(suite_name, p);
      if (ver_csv) {
        std::cout << rep.csv();
      } else if (as_json) {
        std::cout << rep.to_json().dump(2) << "\n";
      } else {
        for (const auto& c : rep.checks)
          std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.description
                    << (c.exact ? "  [exact]"
                                : "  [max deviation " + format_double(c.max_deviation) + "]")
                    << "\n";
        std::cout << (rep.overall_pass() ? "OVERALL PASS" : "OVERALL FAIL")
                  << "\n";
      }
      return rep.overall_pass() ? 0 : 1;
    }

    std::cerr << "no subcommand action taken\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      app.exit(e);
      return 0;
    }
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
