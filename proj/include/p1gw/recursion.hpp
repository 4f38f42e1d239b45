#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "p1gw/correlators.hpp"

namespace p1gw {

/// Index set K = {k_1, ..., k_m} in listing order together with the b-value
/// attached to each index.
struct RecursionKey {
  struct Entry {
    int index;
    int b;
    friend auto operator<=>(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> entries;
};

/// R_{} = R;  R_K = sum_{I u J = K - {k_1}} [lambda (lambda^{b_{k_1}} R_J)_+, R_I],
/// where I, J keep the listing order of K. Equivalently -lambda [R_I, (lambda^b R_J)_+].
ResolventMatrix r_family(const RecursionKey& key, int depth);

/// The bare bracket [A, (lambda^b B)_+] without the lambda factor or sign.
ResolventMatrix bare_bracket(const ResolventMatrix& a, const ResolventMatrix& b_mat, int b);

/// Coefficient of lambda_1^{-i-2} lambda_2^{-j-2} in
/// sum_{I u J = K} tr[R_I(l1) R_J(l2)] / (l1 - l2)^2 - delta_{K,{}} / (l1 - l2)^2,
/// divided by (i+1)! (j+1)! prod (b+1)! eps^{|K|+2}: <tau_{b_1} ... tau_{b_m} tau_i tau_j>.
EpsLaurent extract_family(const RecursionKey& key, int i, int j, int depth);

/// R_0^b, ..., R_m^b with R_0 = R and
/// R_m = sum_{i<m} C(m-1, i) [lambda (lambda^b R_{m-1-i})_+, R_i]. Memoized per (b, depth).
std::vector<ResolventMatrix> rm_equal_sequence(int b, int m, int depth);
ResolventMatrix rm_equal(int b, int m, int depth);

/// <tau_b^m tau_i tau_j> from the coefficient of lambda_1^{-i-2} lambda_2^{-j-2} in
/// sum_t C(m, t) tr[R_t(l1) R_{m-t}(l2)] / (l1 - l2)^2 - delta_{m,0} / (l1 - l2)^2,
/// divided by (i+1)! (j+1)! (b+1)!^m eps^{m+2}. Requires i, j >= 1.
EpsLaurent extract_bij(int b, int m, int i, int j, int depth);

int default_bij_depth(int b, int m);

struct BijResult {
  EpsLaurent value;
  int depth_used = 0;
  bool stability_verified = false;
};

/// Starts at `start_depth` (default_bij_depth when absent), re-checks at +4 and
/// escalates on disagreement or DepthExceeded (at most three times).
BijResult extract_bij_checked(int b, int m, int i, int j, bool stability = true,
                              std::optional<int> start_depth = std::nullopt);

/// Rows n (n_min..n_max) and columns g (0..g_max) of <tau_b^n>_{g, d = bn/2 + 1 - g}.
struct PolygonTable {
  struct Row {
    int n = 0;
    std::vector<Rational> by_genus;  // index g
    EpsLaurent value;
    int depth_used = 0;
    bool stability_verified = false;
  };
  int b = 0;
  int g_max = 0;
  std::vector<Row> rows;

  const Row* row(int n) const;
};

/// b >= 1 and n >= 2 use extract_bij(b, n - 2, b, b); b = 0 uses the direct
/// n-point route; n = 1 uses the one-point formula.
PolygonTable polygon_table(int b, int n_max, int g_max, int n_min = 2, const EngineOptions& options = {});

}  // namespace p1gw
