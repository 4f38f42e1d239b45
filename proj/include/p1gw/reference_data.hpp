#pragma once

#include <string>
#include <vector>

#include "p1gw/eps_laurent.hpp"
#include "p1gw/mat2.hpp"

namespace p1gw::reference {

/// Published values used as fixed test vectors and by `verify tables`.
/// Every number is stored as an exact "p/q" string.

/// Matrix coefficients of R at lambda^0 .. lambda^{-4} (index = -exponent).
const std::vector<Mat2<EpsLaurent>>& resolvent_head();

struct SeriesValue {
  std::vector<int> insertions;
  EpsLaurent value;
};

/// <tau_1^6>, <tau_2^5>, <tau_3^4>, <tau_4^3>, <tau_6^2>.
const std::vector<SeriesValue>& flagship_correlators();

/// Coefficients of lambda^{-2}, lambda^{-4}, lambda^{-6} of the one-point
/// generating series sum_k <tau_k> (k+1)! eps / lambda^{k+2}.
const std::vector<EpsLaurent>& one_point_series_head();

struct TableRow {
  int n = 0;
  std::vector<Rational> by_genus;  // columns g = 0, 1, ...
};

struct PolygonReference {
  int b = 0;
  std::vector<TableRow> rows;
  const TableRow* row(int n) const;
};

/// Tables of <tau_b^n>_{g, d = bn/2 + 1 - g} for b = 1..6.
const std::vector<PolygonReference>& polygon_tables();
const PolygonReference& polygon_table_reference(int b);

/// Rows whose printed values disagree with the one-point formula and are
/// therefore reported separately rather than checked (n = 1 for b = 2, 4, 6).
bool is_known_conflict(int b, int n);

}  // namespace p1gw::reference
