#include "p1gw/multi_series.hpp"

#include <algorithm>

#include "p1gw/errors.hpp"

namespace p1gw {

MultiSeries::MultiSeries(int variables) : n_(variables), depth_(static_cast<std::size_t>(variables), kExactDepth) {
  if (variables < 1 || variables > kMaxVariables) {
    throw InvalidArgument("MultiSeries supports 1.." + std::to_string(kMaxVariables) + " variables");
  }
}

MultiSeries MultiSeries::constant(int variables, const EpsLaurent& c) {
  MultiSeries m(variables);
  m.add_to(Exponents(static_cast<std::size_t>(variables), 0), c);
  return m;
}

MultiSeries MultiSeries::embed(const LambdaSeries& s, int var, int variables) {
  MultiSeries m(variables);
  m.depth_[static_cast<std::size_t>(var)] = s.depth();
  for (const auto& [e, c] : s.terms()) {
    Exponents ex(static_cast<std::size_t>(variables), 0);
    ex[static_cast<std::size_t>(var)] = e;
    m.terms_.emplace(std::move(ex), c);
  }
  return m;
}

int MultiSeries::positive_degree(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(var)]);
  return d;
}

bool MultiSeries::in_window(const Exponents& e) const {
  for (int i = 0; i < n_; ++i) {
    const int d = depth_[static_cast<std::size_t>(i)];
    if (!is_exact_depth(d) && e[static_cast<std::size_t>(i)] < -d) return false;
  }
  return true;
}

EpsLaurent MultiSeries::coeff(const Exponents& e) const {
  if (static_cast<int>(e.size()) != n_) throw InvalidArgument("exponent vector has wrong length");
  for (int i = 0; i < n_; ++i) {
    const int d = depth_[static_cast<std::size_t>(i)];
    if (!is_exact_depth(d) && e[static_cast<std::size_t>(i)] < -d) {
      throw DepthExceeded(e[static_cast<std::size_t>(i)], d);
    }
  }
  auto it = terms_.find(e);
  return it == terms_.end() ? EpsLaurent{} : it->second;
}

void MultiSeries::add_to(const Exponents& e, const EpsLaurent& c) {
  if (c.is_zero() || !in_window(e)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiSeries::set_depth(int var, int depth) {
  depth_[static_cast<std::size_t>(var)] = std::min(depth_[static_cast<std::size_t>(var)], depth);
  drop_outside_window();
}

void MultiSeries::drop_outside_window() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = in_window(it->first) ? std::next(it) : terms_.erase(it);
  }
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o) {
  if (o.n_ != n_) throw InvalidArgument("variable count mismatch");
  for (int i = 0; i < n_; ++i) {
    auto idx = static_cast<std::size_t>(i);
    depth_[idx] = std::min(depth_[idx], o.depth_[idx]);
  }
  drop_outside_window();
  for (const auto& [e, c] : o.terms_) add_to(e, c);
  return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& o) { return *this += EpsLaurent(-1) * o; }

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
  if (a.n_ != b.n_) throw InvalidArgument("variable count mismatch");
  MultiSeries out(a.n_);
  for (int i = 0; i < a.n_; ++i) {
    auto idx = static_cast<std::size_t>(i);
    out.depth_[idx] = std::min(reduce_depth(a.depth_[idx], b.positive_degree(i)),
                               reduce_depth(b.depth_[idx], a.positive_degree(i)));
  }
  MultiSeries::Exponents e(static_cast<std::size_t>(a.n_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      if (!out.in_window(e)) continue;
      out.add_to(e, ca * cb);
    }
  }
  return out;
}

MultiSeries operator*(const EpsLaurent& s, MultiSeries a) {
  if (s.is_zero()) {
    a.terms_.clear();
    return a;
  }
  for (auto& [e, c] : a.terms_) c = s * c;
  return a;
}

MultiSeries inv_diff_expand(int variables, int a, int b, int power, int depth) {
  if (a == b) throw InvalidArgument("inv_diff_expand: variables must differ");
  if (power != 1 && power != 2) throw InvalidArgument("inv_diff_expand: power must be 1 or 2");
  if (a < 0 || b < 0 || a >= variables || b >= variables) throw InvalidArgument("inv_diff_expand: bad variable");
  const int big = std::min(a, b);    // larger magnitude
  const int small = std::max(a, b);  // smaller magnitude
  const int sign = (a < b || power == 2) ? 1 : -1;
  MultiSeries m(variables);
  m.depth_[static_cast<std::size_t>(big)] = depth;
  for (int j = 0; j + power <= depth; ++j) {
    MultiSeries::Exponents e(static_cast<std::size_t>(variables), 0);
    e[static_cast<std::size_t>(small)] = j;
    e[static_cast<std::size_t>(big)] = -j - power;
    const int weight = power == 1 ? 1 : j + 1;
    m.terms_.emplace(std::move(e), EpsLaurent(sign * weight));
  }
  return m;
}

}  // namespace p1gw
