#include "qkraw/qpoly.hpp"
#include "qkraw/reps.hpp"
#include "qkraw/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace qkraw;

namespace {

Cplx entry(const SparseOperator& op, uint32_t out, uint32_t in) {
  for (const auto& [o, v] : op.column(in))
    if (o == out) return v;
  return 0.0;
}

double op_distance(const SparseOperator& a, const SparseOperator& b, long margin) {
  return a.max_deviation(b, margin);
}

}  // namespace

TEST_CASE("truncated space indexing") {
  TruncatedSpace sp(3, 5);
  REQUIRE(sp.size() == 125);
  for (uint32_t i = 0; i < sp.size(); ++i)
    REQUIRE(sp.flatten(sp.unflatten(i)) == i);
  REQUIRE(sp.flatten({1, 2, 3}) == 1 * 25 + 2 * 5 + 3);
  REQUIRE(sp.in_window(sp.flatten({2, 2, 2}), 2));
  REQUIRE_FALSE(sp.in_window(sp.flatten({1, 2, 2}), 2));
  REQUIRE_FALSE(sp.in_window(sp.flatten({2, 2, 3}), 2));
  REQUIRE_THROWS_AS(TruncatedSpace(4, 300), std::domain_error);
}

TEST_CASE("elementary generator actions") {
  double q = 0.5;
  long K = 10;
  auto op11 = elementary_op(1, {1, 1}, K, q);
  REQUIRE(op11.column(0).empty());  // annihilates the bottom state
  REQUIRE(std::abs(entry(op11, 1, 2) - Cplx(std::sqrt(1 - std::pow(q, 4.0)))) == 0.0);
  auto op33 = elementary_op(1, {3, 3}, K, q);
  for (long k = 0; k < K; ++k) REQUIRE(entry(op33, uint32_t(k), uint32_t(k)) == Cplx(1.0));
  auto op21_2 = elementary_op(2, {2, 1}, K, q);
  REQUIRE(op21_2.nnz() == 0);
  auto op12 = elementary_op(1, {1, 2}, K, q);
  REQUIRE(entry(op12, 3, 3) == Cplx(std::pow(q, 4.0)));
  auto op21 = elementary_op(1, {2, 1}, K, q);
  REQUIRE(entry(op21, 3, 3) == Cplx(-std::pow(q, 3.0)));
  REQUIRE_THROWS_AS(elementary_op(3, {1, 1}, K, q), std::domain_error);
  REQUIRE_THROWS_AS(elementary_op(1, {1, 1}, K, 1.5), std::domain_error);
}

TEST_CASE("word of length one reduces to the elementary representation") {
  double q = 0.6;
  long K = 12;
  for (int which : {1, 2})
    for (int code = 0; code < 9; ++code) {
      auto a = elementary_op(which, GeneratorIdx::from_code(code), K, q);
      auto b = word_generator_op({which}, GeneratorIdx::from_code(code), K, q);
      REQUIRE(op_distance(a, b, 0) == 0.0);
    }
}

TEST_CASE("word generator images against a direct path sum") {
  double q = 0.5;
  long K = 9;
  TruncatedSpace sp(2, K);
  for (int r = 1; r <= 3; ++r)
    for (int s = 1; s <= 3; ++s) {
      auto op = word_generator_op({2, 1}, GeneratorIdx(r, s), K, q);
      // independent: loop over middle index and per-leg actions
      for (long u = 0; u < K - 1; ++u)
        for (long v = 0; v < K - 1; ++v) {
          std::map<uint32_t, Cplx> expect;
          for (int mid = 1; mid <= 3; ++mid) {
            auto l = detail::leg_action(2, (r - 1) * 3 + (mid - 1), u, K, q);
            auto rr = detail::leg_action(1, (mid - 1) * 3 + (s - 1), v, K, q);
            if (l && rr)
              expect[sp.flatten({l->out, rr->out})] += l->coeff * rr->coeff;
          }
          for (const auto& [out, val] : expect)
            REQUIRE(std::abs(entry(op, out, sp.flatten({u, v})) - val) < 1e-15);
          for (const auto& [out, val] : op.column(sp.flatten({u, v})))
            if (!expect.count(out)) REQUIRE(std::abs(val) == 0.0);
        }
    }
}

TEST_CASE("representations annihilate the defining relations") {
  for (double q : {0.5, 0.7}) {
    REQUIRE(verify::relation_fidelity_worst({1}, 16, q) <= 1e-12);
    REQUIRE(verify::relation_fidelity_worst({2}, 16, q) <= 1e-12);
    REQUIRE(verify::relation_fidelity_worst({2, 1}, 12, q) <= 1e-12);
  }
}

TEST_CASE("word representation is an algebra homomorphism") {
  double q = 0.6;
  long K = 14;
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> gen_dist(0, 8);
  for (int it = 0; it < 12; ++it) {
    std::vector<int> w1{gen_dist(rng), gen_dist(rng)};
    std::vector<int> w2{gen_dist(rng), gen_dist(rng)};
    NCPoly p = normal_order_codes(w1), r = normal_order_codes(w2);
    SparseOperator lhs = word_op({2, 1}, multiply(p, r), K, q);
    SparseOperator rhs = word_op({2, 1}, p, K, q) * word_op({2, 1}, r, K, q);
    REQUIRE(op_distance(lhs, rhs, 4) <= 1e-11);
  }
}

TEST_CASE("star fidelity: the star maps to the numeric adjoint") {
  double q = 0.6;
  long K = 14;
  for (const auto& word : std::vector<std::vector<int>>{{1}, {2}, {2, 1}}) {
    for (int code = 0; code < 9; ++code) {
      GeneratorIdx g = GeneratorIdx::from_code(code);
      SparseOperator starred =
          word_op(word, star_generator(g.row, g.col), K, q);
      SparseOperator adj = adjoint(word_generator_op(word, g, K, q));
      // compare on the window: star images have degree 2, so margin 2
      REQUIRE(op_distance(starred, adj, 2) <= 1e-11);
    }
  }
}

TEST_CASE("adjoint involution and identity") {
  double q = 0.5;
  TruncatedSpace sp(2, 8);
  SparseOperator id = SparseOperator::identity(sp);
  REQUIRE(op_distance(adjoint(id), id, 0) == 0.0);
  SparseOperator op = word_generator_op({2, 1}, {2, 2}, 8, q);
  REQUIRE(op_distance(adjoint(adjoint(op)), op, 0) == 0.0);
}

TEST_CASE("matrix element application: Kronecker vanishing and shifts") {
  Rational q0(3, 5);
  double q = 0.6;
  long K = 16, N = 2;
  // word [1]: vanishes unless m1+m2 = n1+n2
  auto out = apply_matrix_element({1}, N, {2, 0, 0}, {1, 0, 1}, {5}, K, q0);
  REQUIRE(out.empty());
  // word [2]: vanishes unless m1 = n1
  out = apply_matrix_element({2}, N, {1, 1, 0}, {0, 1, 1}, {5}, K, q0);
  REQUIRE(out.empty());
  // word [2,1]: a single target state scaled by the bivariate scalar
  for (const auto& m : multi_indices(N))
    for (const auto& n : multi_indices(N)) {
      long u = 6, v = 7;
      out = apply_matrix_element({2, 1}, N, m, n, {u, v}, K, q0);
      Cplx s = bi_shift_scalar(m[0], m[1], n[0], n[1], N, u, v, q);
      if (s == Cplx(0.0)) {
        REQUIRE(out.empty());
      } else {
        REQUIRE(out.size() == 1);
        auto it = out.begin();
        REQUIRE(it->first ==
                std::vector<long>{u - m[1] + N - n[0] - n[1], v + n[1] - m[0]});
        REQUIRE(std::abs(it->second - s) <= 1e-12 * std::abs(s));
      }
    }
  REQUIRE_THROWS_AS(apply_matrix_element({1}, N, {2, 0, 0}, {2, 0, 0}, {15}, K, q0),
                    std::domain_error);
  REQUIRE_THROWS_AS(apply_matrix_element({2, 1}, N, {2, 0, 0}, {2, 0, 0}, {5}, K, q0),
                    std::domain_error);
}

TEST_CASE("torus characters twist without breaking the relations") {
  double q = 0.5;
  long K = 10;
  for (double theta1 : {0.3, 1.2})
    for (double theta2 : {-0.7, 2.0}) {
      TorusChar torus = TorusChar::phases(theta1, theta2);
      REQUIRE(std::abs(std::abs(torus.alpha(1)) - 1.0) < 1e-15);
      REQUIRE(std::abs(std::abs(torus.alpha(2)) - 1.0) < 1e-15);
      REQUIRE(std::abs(torus.alpha(1) * torus.alpha(2) * torus.alpha(3) -
                       Cplx(1.0)) < 1e-14);
      TruncatedSpace sp(2, K);
      double worst = 0.0;
      for (const auto& [name, combo] : verify::relation_words()) {
        (void)name;
        SparseOperator acc(sp);
        for (const auto& [coeff, gens] : combo) {
          SparseOperator term = SparseOperator::identity(sp);
          for (const auto& g : gens)
            term = term * word_generator_op({2, 1}, g, K, q, &torus);
          term *= Cplx(coeff.eval(q), 0.0);
          acc += term;
        }
        worst = std::max(worst, acc.max_abs_on_window(3));
      }
      REQUIRE(worst <= 1e-12);
    }
}

TEST_CASE("word 121 path sum through the univariate and bivariate scalars") {
  Rational q0(1, 2);
  double q = 0.5;
  long K = 12;
  TruncatedSpace sp(3, K);
  for (long N = 1; N <= 2; ++N)
  for (const auto& m : multi_indices(N))
    for (const auto& n : multi_indices(N)) {
      TElement t = t_element(N, m, n, q0);
      SparseOperator op = word_op({1, 2, 1}, t.h, K, q);
      for (long a = N; a < K - N; ++a)
        for (long u = N; u < K - N; ++u)
          for (long v = N; v < K - N; ++v) {
            std::map<uint32_t, Cplx> expect;
            long T1 = m[0] + m[1];
            for (long k1 = 0; k1 <= T1; ++k1) {
              Cplx s1 = uni_shift_scalar(m[0], k1, T1, a, q);
              Cplx s2 = bi_shift_scalar(k1, T1 - k1, n[0], n[1], N, u, v, q);
              long ta = a + m[1] - k1;
              long tu = u + N - m[0] - m[1] - n[0] - n[1] + k1;
              long tv = v + n[1] - k1;
              Cplx val = s1 * s2;
              if (val == Cplx(0.0) || ta < 0 || tu < 0 || tv < 0) continue;
              expect[sp.flatten({ta, tu, tv})] += val;
            }
            std::map<uint32_t, Cplx> got;
            for (const auto& [i, val] : op.column(sp.flatten({a, u, v})))
              got[i] = val * t.factor;
            for (const auto& [tk, tv2] : expect)
              REQUIRE(std::abs((got.count(tk) ? got[tk] : 0.0) - tv2) < 1e-12);
            for (const auto& [gk, gv] : got)
              if (!expect.count(gk)) REQUIRE(std::abs(gv) < 1e-12);
          }
    }
}

TEST_CASE("Wall coefficients intertwine words 211 and 21") {
  // The map M|u,v,t> = sum_w pbar_{min(v,t)}(q^{2w}; q^{2|t-v|}; q^2)|u,w>
  // collapses the two trailing legs of the word-211 representation onto
  // one leg of word 21: M pi211(x) = pi21(x) M.  This is the operator
  // statement behind the product identity for Wall and bivariate
  // polynomials.
  double q = 0.5;
  long K3 = 10, WMAX = 48;
  TruncatedSpace sp3(3, K3);
  TruncatedSpace sp2(2, WMAX);
  auto apply_M = [&](const std::vector<std::pair<uint32_t, Cplx>>& vec) {
    std::map<uint32_t, Cplx> out;
    for (const auto& [idx, c] : vec) {
      auto ks = sp3.unflatten(idx);
      long u = ks[0], v = ks[1], t = ks[2];
      for (long w = 0; w < WMAX; ++w) {
        Cplx pb = wall_pbar(std::min(v, t), w, std::labs(t - v), q);
        if (pb != Cplx(0.0)) out[sp2.flatten({u, w})] += c * pb;
      }
    }
    return out;
  };
  for (int code = 0; code < 9; ++code) {
    GeneratorIdx g = GeneratorIdx::from_code(code);
    SparseOperator op211 = word_generator_op({2, 1, 1}, g, K3, q);
    SparseOperator op21 = word_generator_op({2, 1}, g, WMAX, q);
    for (long u = 1; u <= 3; ++u)
      for (long v = 0; v <= 3; ++v)
        for (long t = 0; t <= 3; ++t) {
          uint32_t in3 = sp3.flatten({u, v, t});
          auto lhs = apply_M(op211.column(in3));
          std::map<uint32_t, Cplx> rhs;
          for (long w = 0; w < WMAX; ++w) {
            Cplx pb = wall_pbar(std::min(v, t), w, std::labs(t - v), q);
            if (pb == Cplx(0.0)) continue;
            for (const auto& [out, c] : op21.column(sp2.flatten({u, w})))
              rhs[out] += pb * c;
          }
          for (const auto& [idx, c] : lhs) {
            auto ks = sp2.unflatten(idx);
            if (ks[1] + 4 >= WMAX) continue;  // truncation tail of the w-sum
            Cplx rv = rhs.count(idx) ? rhs[idx] : 0.0;
            REQUIRE(std::abs(c - rv) < 1e-10);
          }
          for (const auto& [idx, c] : rhs) {
            auto ks = sp2.unflatten(idx);
            if (ks[1] + 4 >= WMAX) continue;
            if (!lhs.count(idx)) REQUIRE(std::abs(c) < 1e-10);
          }
        }
  }
}

TEST_CASE("uni and bi match suites at small parameters") {
  REQUIRE(verify::uni_match_worst(1, 2, 8, Rational(1, 2), 16) <= 1e-10);
  REQUIRE(verify::uni_match_worst(2, 2, 8, Rational(1, 2), 16) <= 1e-10);
  REQUIRE(verify::bi_match_worst(1, Rational(3, 5), 12) <= 1e-9);
}

TEST_CASE("unitarity completeness sums at level one") {
  REQUIRE(verify::unitarity_worst(1, Rational(3, 5), 12, 0) <= 1e-9);
  REQUIRE(verify::unitarity_worst(1, Rational(3, 5), 12, 1) <= 1e-9);
}

TEST_CASE("hexagon identity in the representation") {
  REQUIRE(verify::hexagon_numeric_worst(Rational(3, 5), 12) <= 1e-10);
}
