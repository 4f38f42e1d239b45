#include "p1gw/eps_laurent.hpp"

#include <algorithm>
#include <sstream>

#include "p1gw/errors.hpp"

namespace p1gw {

EpsLaurent::EpsLaurent(const Rational& constant) {
  if (constant != 0) terms_.emplace_back(0, constant);
}

EpsLaurent EpsLaurent::monomial(const Rational& c, int exponent) {
  EpsLaurent r;
  if (c != 0) r.terms_.emplace_back(exponent, c);
  return r;
}

EpsLaurent EpsLaurent::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  EpsLaurent r;
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first) {
      r.terms_.back().second += t.second;
    } else {
      r.terms_.push_back(std::move(t));
    }
  }
  r.prune();
  return r;
}

Rational EpsLaurent::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

std::optional<int> EpsLaurent::min_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().first;
}

std::optional<int> EpsLaurent::max_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.back().first;
}

bool EpsLaurent::all_even() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first % 2 == 0; });
}

bool EpsLaurent::all_odd() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first % 2 != 0; });
}

EpsLaurent EpsLaurent::shifted(int k) const {
  EpsLaurent r = *this;
  for (auto& t : r.terms_) t.first += k;
  return r;
}

EpsLaurent EpsLaurent::truncated_above(int max_exp) const {
  EpsLaurent r;
  for (const auto& t : terms_) {
    if (t.first > max_exp) break;
    r.terms_.push_back(t);
  }
  return r;
}

void EpsLaurent::prune() {
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term& t) { return t.second == 0; }),
               terms_.end());
}

namespace {

template <typename Op>
std::vector<EpsLaurent::Term> merge(const std::vector<EpsLaurent::Term>& a,
                                    const std::vector<EpsLaurent::Term>& b, Op op) {
  std::vector<EpsLaurent::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, op(Rational(0), j->second));
      ++j;
    } else {
      Rational s = op(i->second, j->second);
      if (s != 0) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

EpsLaurent& EpsLaurent::operator+=(const EpsLaurent& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) return *this = other;
  terms_ = merge(terms_, other.terms_, [](const Rational& x, const Rational& y) -> Rational { return x + y; });
  return *this;
}

EpsLaurent& EpsLaurent::operator-=(const EpsLaurent& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge(terms_, other.terms_, [](const Rational& x, const Rational& y) -> Rational { return x - y; });
  return *this;
}

EpsLaurent& EpsLaurent::operator*=(const EpsLaurent& other) { return *this = *this * other; }

EpsLaurent& EpsLaurent::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= s;
  }
  return *this;
}

EpsLaurent operator-(EpsLaurent a) {
  for (auto& t : a.terms_) t.second = -t.second;
  return a;
}

EpsLaurent operator*(const EpsLaurent& a, const EpsLaurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return mul_truncated(a, b, a.terms_.back().first + b.terms_.back().first);
}

EpsLaurent mul_truncated(const EpsLaurent& a, const EpsLaurent& b, int max_exp) {
  EpsLaurent r;
  if (a.is_zero() || b.is_zero()) return r;
  const int lo = a.terms().front().first + b.terms().front().first;
  const int hi = std::min(max_exp, a.terms().back().first + b.terms().back().first);
  if (hi < lo) return r;
  std::vector<Rational> dense(static_cast<std::size_t>(hi - lo + 1));
  std::vector<bool> touched(dense.size(), false);
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      const int e = ea + eb;
      if (e > hi) break;
      auto idx = static_cast<std::size_t>(e - lo);
      if (touched[idx]) {
        dense[idx] += ca * cb;
      } else {
        dense[idx] = ca * cb;
        touched[idx] = true;
      }
    }
  }
  std::vector<EpsLaurent::Term> terms;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (touched[i] && dense[i] != 0) terms.emplace_back(lo + static_cast<int>(i), std::move(dense[i]));
  }
  return EpsLaurent::from_terms(std::move(terms));
}

std::string EpsLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << p1gw::to_string(mag);
      continue;
    }
    if (mag != 1) os << p1gw::to_string(mag) << "*";
    os << "e";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

namespace {

EpsLaurent s_series(int order) {
  std::vector<EpsLaurent::Term> terms;
  for (int m = 0; 2 * m <= order; ++m) {
    BigInt den = pow(BigInt(4), static_cast<unsigned>(m)) * factorial(2 * m + 1);
    terms.emplace_back(2 * m, Rational(BigInt(1), den));
  }
  return EpsLaurent::from_terms(std::move(terms));
}

// 1/a for a power series with constant term 1, through eps^order.
EpsLaurent invert_unit_series(const EpsLaurent& a, int order) {
  std::vector<Rational> inv(static_cast<std::size_t>(order + 1));
  inv[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (int i = 1; i <= n; ++i) {
      Rational ai = a.coeff(i);
      if (ai != 0) acc += ai * inv[static_cast<std::size_t>(n - i)];
    }
    inv[static_cast<std::size_t>(n)] = -acc;
  }
  std::vector<EpsLaurent::Term> terms;
  for (int n = 0; n <= order; ++n) terms.emplace_back(n, inv[static_cast<std::size_t>(n)]);
  return EpsLaurent::from_terms(std::move(terms));
}

}  // namespace

EpsLaurent s_power(int p, int order) {
  if (order < 0 || order % 2 != 0) throw InvalidArgument("s_power: order must be a non-negative even integer");
  EpsLaurent base = s_series(order);
  if (p < 0) base = invert_unit_series(base, order);
  EpsLaurent result(1);
  for (int i = 0; i < std::abs(p); ++i) result = mul_truncated(result, base, order);
  return result;
}

}  // namespace p1gw
