#pragma once

#include <map>

#include "p1gw/eps_laurent.hpp"
#include "p1gw/mat2.hpp"

namespace p1gw {

/// Sentinel validity depth of a series known exactly at every order
/// (polynomials in lambda, constants).
inline constexpr int kExactDepth = 1 << 28;

inline bool is_exact_depth(int depth) { return depth >= kExactDepth / 2; }

/// depth - k, keeping exact depths exact.
inline int reduce_depth(int depth, int k) { return is_exact_depth(depth) ? kExactDepth : depth - k; }

/// Truncated Laurent series in lambda with EpsLaurent coefficients.
///
/// Coefficients of lambda^e are exact for every e >= -depth(); nothing below
/// that is stored, and asking for it throws DepthExceeded. Positive exponents
/// are allowed.
class LambdaSeries {
 public:
  LambdaSeries() = default;
  LambdaSeries(const EpsLaurent& constant);  // NOLINT(google-explicit-constructor)
  LambdaSeries(int constant) : LambdaSeries(EpsLaurent(constant)) {}  // NOLINT

  static LambdaSeries monomial(const EpsLaurent& c, int exponent, int depth = kExactDepth);
  /// Zero series that is exact only down to lambda^{-depth}.
  static LambdaSeries zero(int depth);

  int depth() const { return depth_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<int, EpsLaurent>& terms() const { return terms_; }

  EpsLaurent coeff(int exponent) const;
  /// Largest stored positive exponent, 0 when there is none.
  int positive_degree() const;

  /// Sets the coefficient of lambda^e; terms below -depth() are ignored.
  void set(int exponent, EpsLaurent c);
  void add_to(int exponent, const EpsLaurent& c);

  /// Same series seen only down to lambda^{-depth}; depth may only shrink.
  LambdaSeries truncated(int depth) const;
  /// lambda^b * this.
  LambdaSeries shifted(int b) const;

  LambdaSeries& operator+=(const LambdaSeries& o);
  LambdaSeries& operator-=(const LambdaSeries& o);
  friend LambdaSeries operator+(LambdaSeries a, const LambdaSeries& b) { return a += b; }
  friend LambdaSeries operator-(LambdaSeries a, const LambdaSeries& b) { return a -= b; }
  friend LambdaSeries operator-(LambdaSeries a);
  friend LambdaSeries operator*(const LambdaSeries& a, const LambdaSeries& b);
  friend LambdaSeries operator*(const EpsLaurent& s, LambdaSeries a);

  /// Identical terms and identical depth.
  friend bool operator==(const LambdaSeries& a, const LambdaSeries& b) {
    return a.depth_ == b.depth_ && a.terms_ == b.terms_;
  }

 private:
  void drop_below_depth();

  std::map<int, EpsLaurent> terms_;
  int depth_ = kExactDepth;
};

/// Coefficients agree at every exponent where both series are exact.
bool agree_within_depth(const LambdaSeries& a, const LambdaSeries& b);

/// Product; depth = min(N_A - deg+(B), N_B - deg+(A)).
inline LambdaSeries series_mul(const LambdaSeries& a, const LambdaSeries& b) { return a * b; }
inline EpsLaurent series_coeff(const LambdaSeries& a, int e) { return a.coeff(e); }

/// Terms with exponent >= 0. The result is a polynomial and therefore exact;
/// requires the input to be exact at lambda^0.
LambdaSeries plus_part(const LambdaSeries& a);
/// Terms with exponent < 0, same depth.
LambdaSeries minus_part(const LambdaSeries& a);

/// 2x2 matrix of LambdaSeries whose four entries share one validity depth.
using ResolventMatrix = Mat2<LambdaSeries>;

int depth(const ResolventMatrix& m);
/// Truncates all entries to their common (minimum) depth.
ResolventMatrix normalized(const ResolventMatrix& m);
ResolventMatrix truncated(const ResolventMatrix& m, int depth);
ResolventMatrix shifted(const ResolventMatrix& m, int b);
ResolventMatrix plus_part(const ResolventMatrix& m);
/// Coefficient matrix of lambda^e.
Mat2<EpsLaurent> coeff_matrix(const ResolventMatrix& m, int e);
int positive_degree(const ResolventMatrix& m);

ResolventMatrix mat_mul(const ResolventMatrix& a, const ResolventMatrix& b);
LambdaSeries mat_trace(const ResolventMatrix& a);
ResolventMatrix mat_commutator(const ResolventMatrix& a, const ResolventMatrix& b);
bool agree_within_depth(const ResolventMatrix& a, const ResolventMatrix& b);

}  // namespace p1gw
