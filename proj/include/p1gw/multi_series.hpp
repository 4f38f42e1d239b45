#pragma once

#include <map>
#include <vector>

#include "p1gw/lambda_series.hpp"

namespace p1gw {

inline constexpr int kMaxVariables = 8;

/// Truncated Laurent series in lambda_1..lambda_n (n <= 8) with EpsLaurent
/// coefficients and one validity depth per variable: a coefficient is exact
/// when every exponent e_i >= -depth(i).
class MultiSeries {
 public:
  using Exponents = std::vector<int>;

  explicit MultiSeries(int variables);

  static MultiSeries constant(int variables, const EpsLaurent& c);
  /// s(lambda_var) viewed as a series in n variables.
  static MultiSeries embed(const LambdaSeries& s, int var, int variables);

  int variables() const { return n_; }
  int depth(int var) const { return depth_[static_cast<std::size_t>(var)]; }
  const std::vector<int>& depths() const { return depth_; }
  const std::map<Exponents, EpsLaurent>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Largest positive exponent of `var` over all stored terms, 0 if none.
  int positive_degree(int var) const;
  bool in_window(const Exponents& e) const;
  EpsLaurent coeff(const Exponents& e) const;

  void add_to(const Exponents& e, const EpsLaurent& c);
  void set_depth(int var, int depth);

  MultiSeries& operator+=(const MultiSeries& o);
  MultiSeries& operator-=(const MultiSeries& o);
  friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
  friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
  friend MultiSeries operator*(const EpsLaurent& s, MultiSeries a);
  friend MultiSeries inv_diff_expand(int variables, int a, int b, int power, int depth);

 private:
  void drop_outside_window();

  int n_;
  std::map<Exponents, EpsLaurent> terms_;
  std::vector<int> depth_;
};

inline MultiSeries multi_mul(const MultiSeries& a, const MultiSeries& b) { return a * b; }

/// (lambda_a - lambda_b)^{-power}, power 1 or 2, expanded in the regime
/// |lambda_1| > |lambda_2| > ... > |lambda_n| (0-based variable indices).
/// For a < b this is sum_j (j+1)^{power-1} lambda_b^j lambda_a^{-j-power},
/// truncated so that lambda_a keeps validity depth `depth`; for a > b the
/// roles swap and the sign is (-1)^power.
MultiSeries inv_diff_expand(int variables, int a, int b, int power, int depth);

}  // namespace p1gw
