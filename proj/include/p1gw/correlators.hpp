#pragma once

#include <optional>
#include <vector>

#include "p1gw/eps_laurent.hpp"
#include "p1gw/multi_series.hpp"
#include "p1gw/resolvent.hpp"

namespace p1gw {

/// Insertion indices (k_1, ..., k_n) of <tau_{k_1}(w) ... tau_{k_n}(w)>,
/// stored sorted descending.
struct CorrelatorKey {
  std::vector<int> insertions;

  int size() const { return static_cast<int>(insertions.size()); }
  int total_degree() const;
  friend bool operator==(const CorrelatorKey&, const CorrelatorKey&) = default;
};

CorrelatorKey make_key(std::vector<int> insertions);

/// <...>_{g,d}
struct GenusDegreeValue {
  int g = 0;
  int d = 0;
  Rational value;
  friend bool operator==(const GenusDegreeValue&, const GenusDegreeValue&) = default;
};

struct CorrelatorRecord {
  CorrelatorKey key;
  EpsLaurent value;  // sum_g eps^{2g-2} <...>_{g,d}
  std::vector<GenusDegreeValue> by_genus;
  int depth_used = 0;
  bool stability_verified = false;
};

struct EngineOptions {
  std::optional<int> depth_override;
  bool stability = true;
  int jobs = 1;
};

/// One-point invariants from <tau_{2g-2+2d}>_{g,d} = Coef(S^{2d-1}, eps^{2g}) / d!^2.
EpsLaurent one_point(int k);

/// Coefficient of lambda_1^{e1} lambda_2^{e2} in
/// (tr[A(lambda_1) B(lambda_2)] - delta) / (lambda_1 - lambda_2)^2,
/// expanded in |lambda_1| > |lambda_2|.
EpsLaurent trace_over_diff_squared_coeff(const ResolventMatrix& a, const ResolventMatrix& b, int e1, int e2,
                                         const EpsLaurent& delta);

/// <tau_{k1} tau_{k2}> from C_2 = (tr[R(l1) R(l2)] - 1) / (l1 - l2)^2 using R at the given depth.
EpsLaurent two_point(int k1, int k2, int depth);
EpsLaurent two_point(int k1, int k2);

/// Raw coefficient of prod lambda_i^{exponents[i]} in the n-point generating
/// series C_n (n >= 2 via the cyclic trace formula, without the -1/(l1-l2)^2
/// correction that n = 2 needs). Any exponent vector is allowed, including
/// positive entries, which must come out zero.
EpsLaurent n_point_coefficient(const std::vector<int>& exponents, int depth, int jobs = 1);

/// <tau_{k_1} ... tau_{k_n}> for 3 <= n <= 8 using R at the given depth.
/// Also confirms that the neighbouring positive-power monomials cancel.
EpsLaurent n_point(const std::vector<int>& ks, int depth, int jobs = 1);
EpsLaurent n_point(const std::vector<int>& ks);

/// Full multivariate expansion of C_n (n >= 3), summed over cyclic
/// representatives, with R truncated at lambda^{-resolvent_depth} and each
/// denominator factor kept to edge_depth terms. Independent of the
/// single-coefficient contraction used by n_point; meant for small n.
/// Coefficients are exact where every exponent is >= -n_point_expansion_window.
MultiSeries n_point_expansion(int n, int resolvent_depth, int edge_depth);
int n_point_expansion_window(int n, int resolvent_depth, int edge_depth);

/// Splits an eps-series into (g, d, value) rows using g - 1 + d = sum(k)/2.
/// Emits explicit zero rows for 0 <= g <= sum(k)/2 + 1.
std::vector<GenusDegreeValue> split_by_genus(const CorrelatorKey& key, const EpsLaurent& value);

int default_depth(const std::vector<int>& ks);

/// Recomputes at both depths; throws UnstableExtraction when they differ.
bool stability_check(const std::vector<int>& ks, int depth_low, int depth_high, int jobs = 1);

CorrelatorRecord correlator(const std::vector<int>& ks, const EngineOptions& options = {});

}  // namespace p1gw
