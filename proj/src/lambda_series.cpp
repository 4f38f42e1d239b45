#include "p1gw/lambda_series.hpp"

#include <algorithm>

#include "p1gw/errors.hpp"

namespace p1gw {

LambdaSeries::LambdaSeries(const EpsLaurent& constant) {
  if (!constant.is_zero()) terms_.emplace(0, constant);
}

LambdaSeries LambdaSeries::monomial(const EpsLaurent& c, int exponent, int depth) {
  LambdaSeries s = zero(depth);
  s.set(exponent, c);
  return s;
}

LambdaSeries LambdaSeries::zero(int depth) {
  LambdaSeries s;
  s.depth_ = depth;
  return s;
}

EpsLaurent LambdaSeries::coeff(int exponent) const {
  if (!is_exact_depth(depth_) && exponent < -depth_) throw DepthExceeded(exponent, depth_);
  auto it = terms_.find(exponent);
  return it == terms_.end() ? EpsLaurent{} : it->second;
}

int LambdaSeries::positive_degree() const {
  if (terms_.empty()) return 0;
  return std::max(0, terms_.rbegin()->first);
}

void LambdaSeries::set(int exponent, EpsLaurent c) {
  if (!is_exact_depth(depth_) && exponent < -depth_) return;
  if (c.is_zero()) {
    terms_.erase(exponent);
  } else {
    terms_[exponent] = std::move(c);
  }
}

void LambdaSeries::add_to(int exponent, const EpsLaurent& c) {
  if (c.is_zero()) return;
  if (!is_exact_depth(depth_) && exponent < -depth_) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LambdaSeries::drop_below_depth() {
  if (is_exact_depth(depth_)) return;
  terms_.erase(terms_.begin(), terms_.lower_bound(-depth_));
}

LambdaSeries LambdaSeries::truncated(int depth) const {
  LambdaSeries s = *this;
  s.depth_ = std::min(depth_, depth);
  s.drop_below_depth();
  return s;
}

LambdaSeries LambdaSeries::shifted(int b) const {
  LambdaSeries s = zero(reduce_depth(depth_, b));
  for (const auto& [e, c] : terms_) s.terms_.emplace(e + b, c);
  return s;
}

LambdaSeries& LambdaSeries::operator+=(const LambdaSeries& o) {
  depth_ = std::min(depth_, o.depth_);
  drop_below_depth();
  for (const auto& [e, c] : o.terms_) add_to(e, c);
  return *this;
}

LambdaSeries& LambdaSeries::operator-=(const LambdaSeries& o) {
  depth_ = std::min(depth_, o.depth_);
  drop_below_depth();
  for (const auto& [e, c] : o.terms_) add_to(e, -c);
  return *this;
}

LambdaSeries operator-(LambdaSeries a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

LambdaSeries operator*(const LambdaSeries& a, const LambdaSeries& b) {
  const int depth = std::min(reduce_depth(a.depth_, b.positive_degree()),
                             reduce_depth(b.depth_, a.positive_degree()));
  LambdaSeries out = LambdaSeries::zero(depth);
  const bool exact = is_exact_depth(depth);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      const int e = ea + eb;
      if (!exact && e < -depth) continue;
      out.add_to(e, ca * cb);
    }
  }
  return out;
}

LambdaSeries operator*(const EpsLaurent& s, LambdaSeries a) {
  if (s.is_zero()) {
    a.terms_.clear();
    return a;
  }
  for (auto& [e, c] : a.terms_) c = s * c;
  return a;
}

bool agree_within_depth(const LambdaSeries& a, const LambdaSeries& b) {
  const int depth = std::min(a.depth(), b.depth());
  const LambdaSeries diff = a.truncated(depth) - b.truncated(depth);
  return diff.is_zero();
}

LambdaSeries plus_part(const LambdaSeries& a) {
  if (!is_exact_depth(a.depth()) && a.depth() < 0) throw DepthExceeded(0, a.depth());
  LambdaSeries out;
  for (auto it = a.terms().lower_bound(0); it != a.terms().end(); ++it) out.set(it->first, it->second);
  return out;
}

LambdaSeries minus_part(const LambdaSeries& a) {
  LambdaSeries out = LambdaSeries::zero(a.depth());
  for (auto it = a.terms().begin(); it != a.terms().lower_bound(0); ++it) out.set(it->first, it->second);
  return out;
}

int depth(const ResolventMatrix& m) {
  return std::min({m.a11.depth(), m.a12.depth(), m.a21.depth(), m.a22.depth()});
}

ResolventMatrix truncated(const ResolventMatrix& m, int d) {
  return m.map([d](const LambdaSeries& s) { return s.truncated(d); });
}

ResolventMatrix normalized(const ResolventMatrix& m) { return truncated(m, depth(m)); }

ResolventMatrix shifted(const ResolventMatrix& m, int b) {
  return m.map([b](const LambdaSeries& s) { return s.shifted(b); });
}

ResolventMatrix plus_part(const ResolventMatrix& m) {
  return m.map([](const LambdaSeries& s) { return plus_part(s); });
}

Mat2<EpsLaurent> coeff_matrix(const ResolventMatrix& m, int e) {
  return m.map([e](const LambdaSeries& s) { return s.coeff(e); });
}

int positive_degree(const ResolventMatrix& m) {
  return std::max({m.a11.positive_degree(), m.a12.positive_degree(), m.a21.positive_degree(),
                   m.a22.positive_degree()});
}

ResolventMatrix mat_mul(const ResolventMatrix& a, const ResolventMatrix& b) { return normalized(a * b); }

LambdaSeries mat_trace(const ResolventMatrix& a) { return trace(a); }

ResolventMatrix mat_commutator(const ResolventMatrix& a, const ResolventMatrix& b) {
  return normalized(commutator(a, b));
}

bool agree_within_depth(const ResolventMatrix& a, const ResolventMatrix& b) {
  return agree_within_depth(a.a11, b.a11) && agree_within_depth(a.a12, b.a12) &&
         agree_within_depth(a.a21, b.a21) && agree_within_depth(a.a22, b.a22);
}

}  // namespace p1gw
