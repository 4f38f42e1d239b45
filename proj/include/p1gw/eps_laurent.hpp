#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "p1gw/exact.hpp"

namespace p1gw {

/// Finite Laurent polynomial in eps with exact rational coefficients.
///
/// Terms are kept sorted by exponent with no stored zero coefficient, so two
/// equal values always have identical term lists.
class EpsLaurent {
 public:
  using Term = std::pair<int, Rational>;

  EpsLaurent() = default;
  EpsLaurent(const Rational& constant);  // NOLINT(google-explicit-constructor)
  EpsLaurent(int constant) : EpsLaurent(Rational(constant)) {}  // NOLINT

  static EpsLaurent monomial(const Rational& c, int exponent);
  /// Builds from arbitrary (exponent, coefficient) pairs; duplicates are summed.
  static EpsLaurent from_terms(std::vector<Term> terms);

  Rational coeff(int exponent) const;
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<int> min_exponent() const;
  std::optional<int> max_exponent() const;

  bool all_even() const;
  bool all_odd() const;

  /// Multiplies by eps^k.
  EpsLaurent shifted(int k) const;
  /// Drops every term with exponent above max_exp.
  EpsLaurent truncated_above(int max_exp) const;

  EpsLaurent& operator+=(const EpsLaurent& other);
  EpsLaurent& operator-=(const EpsLaurent& other);
  EpsLaurent& operator*=(const EpsLaurent& other);
  EpsLaurent& operator*=(const Rational& s);

  friend EpsLaurent operator+(EpsLaurent a, const EpsLaurent& b) { return a += b; }
  friend EpsLaurent operator-(EpsLaurent a, const EpsLaurent& b) { return a -= b; }
  friend EpsLaurent operator*(const EpsLaurent& a, const EpsLaurent& b);
  friend EpsLaurent operator*(EpsLaurent a, const Rational& s) { return a *= s; }
  friend EpsLaurent operator*(const Rational& s, EpsLaurent a) { return a *= s; }
  friend EpsLaurent operator-(EpsLaurent a);
  friend bool operator==(const EpsLaurent& a, const EpsLaurent& b) { return a.terms_ == b.terms_; }

  /// Human-readable form, e.g. "120*e^-2 + 40 + 1/2*e^2".
  std::string to_string() const;

 private:
  void prune();
  std::vector<Term> terms_;
};

/// Product truncated to exponents <= max_exp.
EpsLaurent mul_truncated(const EpsLaurent& a, const EpsLaurent& b, int max_exp);

/// Coefficient of eps^m; zero when absent.
inline Rational eps_coeff(const EpsLaurent& a, int m) { return a.coeff(m); }

/// S(eps)^p through eps^order, where S(eps) = sinh(eps/2)/(eps/2)
/// = sum_m eps^{2m} / (4^m (2m+1)!). Negative p inverts the series first.
EpsLaurent s_power(int p, int order);

}  // namespace p1gw
