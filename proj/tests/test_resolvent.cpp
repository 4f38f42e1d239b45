#include "doctest.h"
#include "p1gw/reference_data.hpp"
#include "p1gw/resolvent.hpp"
#include "support.hpp"

using namespace p1gw;
using namespace p1gw::testing;

TEST_CASE("alpha examples") {
  const LambdaSeries a = alpha_series(6);
  CHECK(a.coeff(-2) == EpsLaurent(1));
  CHECK(a.coeff(-4) == eps({{2, "1/4"}, {0, "3"}}));
  CHECK(a.coeff(-6) == eps({{4, "1/16"}, {2, "15/2"}, {0, "10"}}));
  CHECK(a.coeff(0).is_zero());
  CHECK(a.coeff(-1).is_zero());
}

TEST_CASE("P and Q examples") {
  const LambdaSeries p = p_series(6), q = q_series(6);
  CHECK(p.coeff(-1) == EpsLaurent(1));
  CHECK(p.coeff(-3) == eps({{2, "1/4"}, {0, "2"}}));
  CHECK(q.coeff(-2) == eps({{1, "-1/2"}}));
}

TEST_CASE("build_resolvent reproduces the published leading coefficients") {
  const ResolventBundle b = build_resolvent(4);
  const auto& head = reference::resolvent_head();
  REQUIRE(head.size() == 5);
  for (int e = 0; e >= -4; --e) CHECK(coeff_matrix(b.r, e) == head[static_cast<std::size_t>(-e)]);

  const Mat2<EpsLaurent> m1 = coeff_matrix(b.r, -1);
  CHECK(m1 == Mat2<EpsLaurent>{0, -1, 1, 0});
  const Mat2<EpsLaurent> m3 = coeff_matrix(b.r, -3);
  CHECK(m3.a12 == eps({{2, "-1/4"}, {0, "-2"}}));
  CHECK(m3.a21 == eps({{2, "1/4"}, {0, "2"}}));
  const Mat2<EpsLaurent> m4 = coeff_matrix(b.r, -4);
  CHECK(m4.a11 == eps({{2, "1/4"}, {0, "3"}}));
  CHECK(m4.a12 == eps({{3, "-1/8"}, {1, "-3"}}));
  CHECK(m4.a21 == m4.a12);
  CHECK(m4.a22 == -m4.a11);
}

TEST_CASE("bundle structure") {
  const ResolventBundle b = build_resolvent(12);
  CHECK(b.beta == b.q - b.p);
  CHECK(b.gamma == b.q + b.p);
  CHECK(b.r.a11 == LambdaSeries(1) + b.alpha);
  CHECK(b.r.a22 == -b.alpha);
  CHECK(b.depth == 12);
  for (const LambdaSeries* s : {&b.alpha, &b.p, &b.q, &b.beta, &b.gamma}) CHECK(s->depth() == 12);
}

TEST_CASE("property: eps parity of alpha, P, Q") {
  const ResolventBundle b = build_resolvent(24);
  for (const auto& [e, c] : b.alpha.terms()) CHECK(c.all_even());
  for (const auto& [e, c] : b.p.terms()) CHECK(c.all_even());
  for (const auto& [e, c] : b.q.terms()) CHECK(c.all_odd());
}

TEST_CASE("property: lambda support of the entries") {
  const ResolventBundle b = build_resolvent(24);
  const LambdaSeries a11_tail = b.r.a11 - LambdaSeries(1);
  for (const auto& [e, c] : a11_tail.terms()) CHECK((e <= -2 && e % 2 == 0));
  for (const auto& [e, c] : b.r.a22.terms()) CHECK((e <= -2 && e % 2 == 0));
  for (const LambdaSeries* off : {&b.r.a12, &b.r.a21}) {
    for (const auto& [e, c] : off->terms()) {
      CHECK(e <= -1);
      if (e % 2 != 0) {
        CHECK(c.all_even());
      } else {
        CHECK(c.all_odd());
      }
    }
  }
}

TEST_CASE("property: tr R = 1 and det R = 0 through lambda^-20") {
  const ResolventBundle b = build_resolvent(20);
  const LambdaSeries tr = mat_trace(b.r);
  const LambdaSeries det = resolvent_determinant(b);
  CHECK(tr.coeff(0) == EpsLaurent(1));
  for (int e = 0; e >= -20; --e) {
    if (e < 0) CHECK(tr.coeff(e).is_zero());
    CHECK(det.coeff(e).is_zero());
  }
  // The same determinant computed entrywise from R.
  const LambdaSeries direct = b.r.a11 * b.r.a22 - b.r.a12 * b.r.a21;
  for (int e = 0; e >= -20; --e) CHECK(direct.coeff(e).is_zero());
}

TEST_CASE("truncating a deep build equals a shallow build") {
  const ResolventBundle deep = build_resolvent(18);
  const ResolventBundle shallow = build_resolvent(9);
  const ResolventBundle cut = truncated(deep, 9);
  CHECK(cut.alpha == shallow.alpha);
  CHECK(cut.p == shallow.p);
  CHECK(cut.q == shallow.q);
  CHECK(cut.r == shallow.r);
  CHECK(shared_resolvent(9)->r == shallow.r);
}
