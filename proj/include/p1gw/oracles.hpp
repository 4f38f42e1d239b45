#pragma once

#include <string>
#include <vector>

#include "p1gw/exact.hpp"

namespace p1gw {

/// 1 / (2^{2m} (2m+1)!), the eps^{2m} coefficient of sinh(eps/2)/(eps/2).
Rational c2m(int m);

/// Degree-one value: product of c_{k_i} over the insertions when every k_i is
/// even, zero otherwise.
Rational degree_one(const std::vector<int>& ks);

/// <tau_0 tau_{2g+2d-2}>_{g,d} in closed form (d >= 1).
Rational two_point_tau0_closed(int g, int d);

/// <tau_1 tau_{2g+2d-3}>_{g,d} in closed form (d >= 1); vanishes at d = 1.
Rational two_point_tau1_closed(int g, int d);

enum class IdentityId { I1, I2, I3, I4, I5, I6 };

const std::vector<IdentityId>& all_identities();
std::string identity_name(IdentityId id);
IdentityId parse_identity(const std::string& name);

struct IdentityReport {
  IdentityId id{};
  int depth = 0;
  int coefficients_checked = 0;
};

/// Compares both sides of the generating identity coefficient by coefficient
/// through lambda^{-depth}: the left side from correlators, the right side
/// from alpha, beta, gamma with polynomial prefactors. Throws
/// IdentityViolation at the first mismatch.
IdentityReport identity_check(IdentityId id, int depth);

/// lim_{g -> oo} (2g+2d-k-1)! <tau_k tau_{2g+2d-k-2}>_{g,d} / (d - 1/2)^{2g}.
/// Rejects (k = 1, d = 1), where the limit is zero.
Rational asymptotic_constant(int k, int d);

struct AsymptoticRow {
  int g = 0;
  Rational ratio;
  Rational difference;  // ratio - limit
};

struct AsymptoticReport {
  int k = 0;
  int d = 0;
  Rational limit;
  std::vector<AsymptoticRow> rows;
};

/// Exact ratios for 0 <= g <= g_max (g_max <= 40). Rows with a negative
/// second index are skipped.
AsymptoticReport asymptotic_report(int k, int d, int g_max);

/// The classical Hurwitz number H_{g,d} = <tau_1^{2g+2d-2}>_{g,d}.
Rational hurwitz(int g, int d);

}  // namespace p1gw
