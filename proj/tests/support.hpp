#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "p1gw/eps_laurent.hpp"
#include "p1gw/exact.hpp"

namespace p1gw::testing {

inline Rational Q(const std::string& s) { return parse_rational(s); }

/// eps({{-2, "120"}, {0, "40"}}) -> 120 e^-2 + 40
inline EpsLaurent eps(std::initializer_list<std::pair<int, const char*>> terms) {
  std::vector<EpsLaurent::Term> v;
  for (const auto& [e, c] : terms) v.emplace_back(e, parse_rational(c));
  return EpsLaurent::from_terms(std::move(v));
}

/// Fixed-seed generator so failures reproduce.
inline std::mt19937& rng() {
  static std::mt19937 gen(20240611u);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Rational random_rational(int span = 9) {
  const int num = uniform(-span, span);
  const int den = uniform(1, span);
  return make_rational(num, den);
}

/// Sparse Laurent polynomial with exponents in [lo, hi].
inline EpsLaurent random_eps(int lo = -3, int hi = 3, int max_terms = 4) {
  std::vector<EpsLaurent::Term> v;
  const int n = uniform(0, max_terms);
  for (int i = 0; i < n; ++i) v.emplace_back(uniform(lo, hi), random_rational());
  return EpsLaurent::from_terms(std::move(v));
}

inline std::vector<int> random_insertions(int n_lo, int n_hi, int k_max) {
  std::vector<int> ks(static_cast<std::size_t>(uniform(n_lo, n_hi)));
  for (int& k : ks) k = uniform(0, k_max);
  return ks;
}

}  // namespace p1gw::testing
