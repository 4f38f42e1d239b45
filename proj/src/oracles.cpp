#include "p1gw/oracles.hpp"

#include <algorithm>
#include <functional>

#include "p1gw/correlators.hpp"
#include "p1gw/errors.hpp"
#include "p1gw/recursion.hpp"
#include "p1gw/resolvent.hpp"

namespace p1gw {

Rational c2m(int m) {
  if (m < 0) throw InvalidArgument("c2m needs m >= 0");
  return make_rational(1, BigInt(pow(BigInt(4), static_cast<unsigned>(m)) * factorial(2 * m + 1)));
}

Rational degree_one(const std::vector<int>& ks) {
  if (ks.empty()) throw InvalidArgument("degree_one needs at least one insertion");
  Rational out(1);
  for (int k : ks) {
    if (k < 0) throw InvalidArgument("insertion indices must be non-negative");
    if (k % 2 != 0) return Rational(0);
    out *= c2m(k / 2);
  }
  return out;
}

namespace {

// sum_{l=0}^{d-1} (-1)^l (2d-1-2l)^power C(2d-1, l)
BigInt odd_alternating_sum(int d, int power) {
  BigInt s = 0;
  for (int l = 0; l < d; ++l) {
    BigInt t = pow(BigInt(2 * d - 1 - 2 * l), static_cast<unsigned>(power)) * binomial(2 * d - 1, l);
    if (l % 2 == 0) {
      s += t;
    } else {
      s -= t;
    }
  }
  return s;
}

void require_gd(int g, int d) {
  if (g < 0 || d < 1) throw InvalidArgument("closed forms need g >= 0 and d >= 1");
}

}  // namespace

Rational two_point_tau0_closed(int g, int d) {
  require_gd(g, d);
  const int n = g + d - 1;
  BigInt den = pow(BigInt(4), static_cast<unsigned>(n)) * factorial(2 * n + 1);
  den *= factorial(d - 1) * factorial(d);
  return make_rational(odd_alternating_sum(d, 2 * n + 1), den);
}

Rational two_point_tau1_closed(int g, int d) {
  require_gd(g, d);
  const int n = g + d - 1;
  const Rational first = make_rational(odd_alternating_sum(d, 2 * n + 1), BigInt(factorial(d - 1) * factorial(d)));
  BigInt second_sum = 0;
  for (int l = 0; l < d; ++l) {
    BigInt t = pow(BigInt(2 * d - 1 - 2 * l), static_cast<unsigned>(2 * n));
    t *= BigInt(binomial(2 * d - 2, l) - binomial(2 * d - 2, l - 1));
    if (l % 2 == 0) {
      second_sum += t;
    } else {
      second_sum -= t;
    }
  }
  const BigInt fd1 = factorial(d - 1);
  const Rational second = make_rational(second_sum, BigInt(fd1 * fd1));
  Rational out = first - second;
  out /= Rational(BigInt(pow(BigInt(4), static_cast<unsigned>(n)) * factorial(2 * n)));
  return out;
}

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = {IdentityId::I1, IdentityId::I2, IdentityId::I3,
                                              IdentityId::I4, IdentityId::I5, IdentityId::I6};
  return ids;
}

std::string identity_name(IdentityId id) { return "I" + std::to_string(static_cast<int>(id) + 1); }

IdentityId parse_identity(const std::string& name) {
  for (IdentityId id : all_identities()) {
    if (identity_name(id) == name) return id;
  }
  throw InvalidArgument("unknown identity '" + name + "'");
}

namespace {

EpsLaurent eps_poly(std::initializer_list<std::pair<int, const char*>> terms) {
  std::vector<EpsLaurent::Term> out;
  for (const auto& [e, v] : terms) out.emplace_back(e, parse_rational(v));
  return EpsLaurent::from_terms(std::move(out));
}

// Polynomial in lambda with eps-polynomial coefficients: {lambda exponent, coefficient}.
LambdaSeries lam_poly(std::initializer_list<std::pair<int, EpsLaurent>> terms) {
  LambdaSeries out;
  for (const auto& [e, c] : terms) out.add_to(e, c);
  return out;
}

struct IdentityShape {
  std::vector<int> fixed;  // insertions besides tau_K
  int eps_power = 0;
  LambdaSeries constant, on_alpha, on_beta, on_gamma;
};

IdentityShape shape_of(IdentityId id) {
  const EpsLaurent one(1);
  switch (id) {
    case IdentityId::I1:
      return {{0}, 2, {}, lam_poly({{0, one}}), {}, {}};
    case IdentityId::I2:
      return {{1}, 2, {}, lam_poly({{1, EpsLaurent(2)}}), lam_poly({{0, one}}), lam_poly({{0, EpsLaurent(-1)}})};
    case IdentityId::I3:
      return {{2},
              2,
              lam_poly({{0, one}}),
              lam_poly({{2, EpsLaurent(3)}, {0, EpsLaurent(2)}}),
              lam_poly({{1, EpsLaurent(2)}, {0, eps_poly({{1, "-1/2"}})}}),
              lam_poly({{1, EpsLaurent(-2)}, {0, eps_poly({{1, "-1/2"}})}})};
    case IdentityId::I4:
      return {{3},
              2,
              lam_poly({{1, EpsLaurent(2)}}),
              lam_poly({{3, EpsLaurent(4)}, {1, EpsLaurent(4)}}),
              lam_poly({{2, EpsLaurent(3)}, {1, eps_poly({{1, "-1"}})}, {0, eps_poly({{0, "2"}, {2, "1/4"}})}}),
              lam_poly({{2, EpsLaurent(-3)}, {1, eps_poly({{1, "-1"}})}, {0, eps_poly({{0, "-2"}, {2, "-1/4"}})}})};
    case IdentityId::I5:
      return {{0, 1},
              3,
              {},
              {},
              lam_poly({{1, EpsLaurent(-1)}, {0, eps_poly({{1, "1/2"}})}}),
              lam_poly({{1, EpsLaurent(-1)}, {0, eps_poly({{1, "-1/2"}})}})};
    case IdentityId::I6:
      return {{1, 1},
              3,
              lam_poly({{0, eps_poly({{1, "1"}})}}),
              lam_poly({{0, eps_poly({{1, "2"}})}}),
              lam_poly({{2, EpsLaurent(-1)}, {1, eps_poly({{1, "1"}})}, {0, eps_poly({{2, "-1/4"}})}}),
              lam_poly({{2, EpsLaurent(-1)}, {1, eps_poly({{1, "-1"}})}, {0, eps_poly({{2, "-1/4"}})}})};
  }
  throw InvalidArgument("unknown identity");
}

}  // namespace

IdentityReport identity_check(IdentityId id, int depth) {
  if (depth < 4) throw InvalidArgument("identity_check needs depth >= 4");
  const IdentityShape shape = shape_of(id);

  BigInt fixed_factorials = 1;
  for (int k : shape.fixed) fixed_factorials *= factorial(k + 1);
  LambdaSeries lhs = LambdaSeries::zero(depth);
  for (int k = 0; k + 2 <= depth; ++k) {
    std::vector<int> ks = shape.fixed;
    ks.push_back(k);
    EpsLaurent v = correlator(ks).value.shifted(shape.eps_power);
    v *= Rational(BigInt(fixed_factorials * factorial(k + 1)));
    lhs.add_to(-k - 2, v);
  }

  const auto bundle = shared_resolvent(depth + 3);
  LambdaSeries rhs = shape.constant + shape.on_alpha * bundle->alpha + shape.on_beta * bundle->beta +
                     shape.on_gamma * bundle->gamma;

  IdentityReport report{id, depth, 0};
  const int top = std::max(rhs.positive_degree(), 0);
  for (int e = top; e >= -depth; --e) {
    const EpsLaurent l = lhs.coeff(e);
    const EpsLaurent r = rhs.coeff(e);
    ++report.coefficients_checked;
    if (l != r) {
      throw IdentityViolation(identity_name(id) + ": coefficient of lambda^" + std::to_string(e) +
                              " differs: correlators give " + l.to_string() + ", resolvent gives " + r.to_string());
    }
  }
  return report;
}

Rational asymptotic_constant(int k, int d) {
  if (k < 0 || d < 1) throw InvalidArgument("asymptotic_constant needs k >= 0 and d >= 1");
  if (k == 1 && d == 1) throw InvalidArgument("the k = 1 asymptotic requires d >= 2");
  const Rational h = make_rational(2 * d - 1, 2);
  Rational lead = 2 * pow(h, 2 * d);
  const BigInt fd = factorial(d);
  lead /= Rational(BigInt(factorial(k + 1) * fd * fd));
  Rational correction = make_rational(1, pow(BigInt(2), static_cast<unsigned>(k + 1))) / pow(h, k + 1);
  if (k % 2 != 0) correction = -correction;
  return lead * (1 + correction);
}

AsymptoticReport asymptotic_report(int k, int d, int g_max) {
  if (g_max < 0 || g_max > 40) throw InvalidArgument("g_max must lie in [0, 40]");
  AsymptoticReport report;
  report.k = k;
  report.d = d;
  report.limit = asymptotic_constant(k, d);
  const Rational h = make_rational(2 * d - 1, 2);
  for (int g = 0; g <= g_max; ++g) {
    const int second = 2 * g + 2 * d - k - 2;
    if (second < 0) continue;
    Rational value;
    if (k == 0) {
      value = two_point_tau0_closed(g, d);
    } else if (k == 1) {
      value = two_point_tau1_closed(g, d);
    } else {
      value = eps_coeff(two_point(k, second), 2 * g - 2);
    }
    const Rational ratio = Rational(factorial(2 * g + 2 * d - k - 1)) * value / pow(h, 2 * g);
    report.rows.push_back({g, ratio, ratio - report.limit});
  }
  return report;
}

Rational hurwitz(int g, int d) {
  if (g < 0 || d < 1) throw InvalidArgument("hurwitz needs g >= 0 and d >= 1");
  const int n = 2 * g + 2 * d - 2;
  if (n < 1) throw InvalidArgument("hurwitz needs 2g + 2d - 2 >= 1");
  return eps_coeff(extract_bij_checked(1, n - 2, 1, 1).value, 2 * g - 2);
}

}  // namespace p1gw
