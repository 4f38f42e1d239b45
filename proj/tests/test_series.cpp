#include "doctest.h"
#include "p1gw/errors.hpp"
#include "p1gw/lambda_series.hpp"
#include "p1gw/multi_series.hpp"
#include "p1gw/resolvent.hpp"
#include "support.hpp"

using namespace p1gw;
using namespace p1gw::testing;

namespace {

LambdaSeries lam(int e, int depth = kExactDepth) { return LambdaSeries::monomial(1, e, depth); }

/// A "true" series: coefficients of lambda^e for e in [-depth, top] drawn from
/// a fixed function of e, so building it at two depths gives consistent data.
LambdaSeries sample_series(int seed, int top, int depth) {
  std::mt19937 gen(static_cast<unsigned>(seed));
  LambdaSeries s = LambdaSeries::zero(depth);
  for (int e = top; e >= -60; --e) {
    const int num = std::uniform_int_distribution<int>(-5, 5)(gen);
    const int ex = std::uniform_int_distribution<int>(-2, 2)(gen);
    if (e >= -depth) s.set(e, EpsLaurent::monomial(num, ex));
  }
  return s;
}

ResolventMatrix random_matrix(int seed, int top, int depth) {
  return {sample_series(seed, top, depth), sample_series(seed + 1, top, depth), sample_series(seed + 2, top, depth),
          sample_series(seed + 3, top, depth)};
}

}  // namespace

TEST_CASE("series_mul examples and depth bookkeeping") {
  const LambdaSeries a = lam(-1, 10) * lam(-1, 10);
  CHECK(a.coeff(-2) == EpsLaurent(1));
  CHECK(a.depth() == 10);

  const LambdaSeries b = (lam(1, 10) + lam(-1, 10)) * lam(-1, 10);
  CHECK(b.coeff(0) == EpsLaurent(1));
  CHECK(b.coeff(-2) == EpsLaurent(1));
  CHECK(b.coeff(-1).is_zero());
  CHECK(b.depth() == 9);

  const LambdaSeries c = sample_series(3, 2, 12);
  CHECK(c * LambdaSeries(1) == c);
}

TEST_CASE("series_coeff refuses coefficients below the validity depth") {
  const LambdaSeries s = sample_series(1, 0, 6);
  CHECK_NOTHROW(s.coeff(-6));
  CHECK_THROWS_AS(s.coeff(-7), DepthExceeded);
  const auto r = build_resolvent(6);
  CHECK(series_coeff(r.r.a11, 0) == EpsLaurent(1));
  CHECK(series_coeff(r.r.a12, -1) == EpsLaurent(-1));
  CHECK_THROWS_AS(series_coeff(r.r.a12, -7), DepthExceeded);
}

TEST_CASE("plus_part examples") {
  const LambdaSeries s = lam(2) + LambdaSeries(1) + lam(-1);
  const LambdaSeries p = plus_part(s);
  CHECK(p.coeff(2) == EpsLaurent(1));
  CHECK(p.coeff(0) == EpsLaurent(1));
  CHECK(p.coeff(-1).is_zero());
  CHECK(is_exact_depth(p.depth()));
  CHECK(plus_part(lam(-1, 5) + lam(-3, 5)).is_zero());

  const ResolventMatrix r = build_resolvent(8).r;
  const ResolventMatrix pr = plus_part(shifted(r, 1));
  CHECK(pr.a11 == lam(1));
}

TEST_CASE("matrix examples") {
  const ResolventMatrix r = build_resolvent(10).r;
  const LambdaSeries tr = mat_trace(r);
  CHECK(tr.coeff(0) == EpsLaurent(1));
  for (int e = -1; e >= -10; --e) CHECK(tr.coeff(e).is_zero());

  const ResolventMatrix a = random_matrix(11, 1, 8);
  const ResolventMatrix zero = mat_commutator(a, a);
  for (const LambdaSeries* s : {&zero.a11, &zero.a12, &zero.a21, &zero.a22}) CHECK(s->is_zero());

  const ResolventMatrix id{LambdaSeries(1), LambdaSeries(), LambdaSeries(), LambdaSeries(1)};
  CHECK(agree_within_depth(mat_mul(a, id), a));
  CHECK(agree_within_depth(mat_mul(id, a), a));
}

TEST_CASE("property: depth soundness of products") {
  for (int trial = 0; trial < 100; ++trial) {
    const int n = uniform(4, 20);
    const int top_a = uniform(0, 3), top_b = uniform(0, 3);
    const int seed = uniform(0, 1 << 20);
    const LambdaSeries low = sample_series(seed, top_a, n) * sample_series(seed + 7, top_b, n);
    const LambdaSeries high = sample_series(seed, top_a, n + 4) * sample_series(seed + 7, top_b, n + 4);
    CHECK(low.depth() >= n - std::max(top_a, top_b));
    CHECK(agree_within_depth(low, high));
    for (int e = top_a + top_b; e >= -low.depth(); --e) CHECK(low.coeff(e) == high.coeff(e));
  }
}

TEST_CASE("property: plus_part + minus_part = whole") {
  for (int trial = 0; trial < 100; ++trial) {
    const LambdaSeries s = sample_series(uniform(0, 1 << 20), uniform(0, 4), uniform(0, 15));
    CHECK(plus_part(s) + minus_part(s) == s);
  }
}

TEST_CASE("property: trace of a product is cyclic") {
  for (int trial = 0; trial < 100; ++trial) {
    const int seed = uniform(0, 1 << 20);
    const ResolventMatrix a = random_matrix(seed, uniform(0, 2), uniform(2, 10));
    const ResolventMatrix b = random_matrix(seed + 17, uniform(0, 2), uniform(2, 10));
    CHECK(agree_within_depth(mat_trace(mat_mul(a, b)), mat_trace(mat_mul(b, a))));
  }
}

TEST_CASE("inv_diff_expand examples") {
  const MultiSeries sq = inv_diff_expand(2, 0, 1, 2, 8);
  CHECK(sq.coeff({-2, 0}) == EpsLaurent(1));
  CHECK(sq.coeff({-3, 1}) == EpsLaurent(2));
  CHECK(sq.coeff({-4, 2}) == EpsLaurent(3));
  CHECK(sq.coeff({-3, 0}).is_zero());

  const MultiSeries one = inv_diff_expand(2, 0, 1, 1, 8);
  CHECK(one.coeff({-1, 0}) == EpsLaurent(1));
  CHECK(one.coeff({-2, 1}) == EpsLaurent(1));

  // 1/(l2 - l1) in the regime |l1| > |l2| is -1/(l1 - l2).
  const MultiSeries flipped = inv_diff_expand(2, 1, 0, 1, 8);
  for (const auto& [e, c] : one.terms()) CHECK(flipped.coeff(e) == -c);
  CHECK(flipped.terms().size() == one.terms().size());
  // Power 2 is symmetric.
  CHECK(inv_diff_expand(2, 1, 0, 2, 8).terms() == sq.terms());
}

TEST_CASE("property: (l_a - l_b)^-2 equals the square of (l_a - l_b)^-1") {
  for (int n = 2; n <= 4; ++n) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        for (int depth : {3, 6, 9}) {
          const MultiSeries one = inv_diff_expand(n, a, b, 1, depth);
          const MultiSeries prod = multi_mul(one, one);
          const MultiSeries sq = inv_diff_expand(n, a, b, 2, depth);
          for (const auto& [e, c] : prod.terms()) {
            if (sq.in_window(e)) CHECK(sq.coeff(e) == c);
          }
          for (const auto& [e, c] : sq.terms()) {
            if (prod.in_window(e)) CHECK(prod.coeff(e) == c);
          }
        }
      }
    }
  }
}

TEST_CASE("multi_mul examples") {
  const LambdaSeries s = sample_series(5, 1, 8), t = sample_series(6, 0, 8);
  const MultiSeries prod = multi_mul(MultiSeries::embed(s, 0, 1), MultiSeries::embed(t, 0, 1));
  const LambdaSeries direct = s * t;
  CHECK(prod.depth(0) == direct.depth());
  for (int e = direct.positive_degree(); e >= -direct.depth(); --e) CHECK(prod.coeff({e}) == direct.coeff(e));

  const MultiSeries m = MultiSeries::embed(s, 1, 3);
  const MultiSeries m1 = multi_mul(m, MultiSeries::constant(3, 1));
  CHECK(m1.terms() == m.terms());

  const MultiSeries x = MultiSeries::embed(lam(-1), 0, 2), y = MultiSeries::embed(lam(-1), 1, 2);
  const MultiSeries xy = multi_mul(x, y);
  CHECK(xy.terms().size() == 1);
  CHECK(xy.coeff({-1, -1}) == EpsLaurent(1));
}
