#include "p1gw/correlators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <thread>

#include "p1gw/errors.hpp"

namespace p1gw {

int CorrelatorKey::total_degree() const { return std::accumulate(insertions.begin(), insertions.end(), 0); }

CorrelatorKey make_key(std::vector<int> insertions) {
  if (insertions.empty()) throw InvalidArgument("a correlator needs at least one insertion");
  for (int k : insertions) {
    if (k < 0) throw InvalidArgument("insertion indices must be non-negative");
  }
  std::sort(insertions.begin(), insertions.end(), std::greater<>());
  return CorrelatorKey{std::move(insertions)};
}

EpsLaurent one_point(int k) {
  if (k < 0) throw InvalidArgument("insertion indices must be non-negative");
  if (k % 2 != 0) return {};
  const int j = k / 2;
  std::vector<EpsLaurent::Term> terms;
  for (int g = 0; g <= j + 1; ++g) {
    const int d = j + 1 - g;
    const BigInt dfact = factorial(d);
    Rational c = s_power(2 * d - 1, 2 * g).coeff(2 * g) / Rational(BigInt(dfact * dfact));
    terms.emplace_back(2 * g - 2, c);
  }
  return EpsLaurent::from_terms(std::move(terms));
}

EpsLaurent trace_over_diff_squared_coeff(const ResolventMatrix& a, const ResolventMatrix& b, int e1, int e2,
                                         const EpsLaurent& delta) {
  // Only terms lambda_1^{-j-2} lambda_2^j with -j-2 + r = e1, r <= deg+(A)
  // contribute, so the expansion needs lambda_1 depth deg+(A) - e1.
  const int top_a = positive_degree(a);
  const int edge_depth = top_a - e1;
  if (edge_depth < 2) return {};
  const MultiSeries kernel = inv_diff_expand(2, 0, 1, 2, edge_depth);
  EpsLaurent out;
  for (const auto& [ex, weight] : kernel.terms()) {
    const int r = e1 - ex[0];
    const int s = e2 - ex[1];
    EpsLaurent t = trace_of_product(coeff_matrix(a, r), coeff_matrix(b, s));
    if (r == 0 && s == 0) t -= delta;
    if (!t.is_zero()) out += weight * t;
  }
  return out;
}

namespace {

Rational factorial_product(const std::vector<int>& ks) {
  BigInt p = 1;
  for (int k : ks) p *= factorial(k + 1);
  return Rational(p);
}

}  // namespace

EpsLaurent two_point(int k1, int k2, int depth) {
  if (k1 < 0 || k2 < 0) throw InvalidArgument("insertion indices must be non-negative");
  auto bundle = shared_resolvent(depth);
  EpsLaurent c = trace_over_diff_squared_coeff(bundle->r, bundle->r, -k1 - 2, -k2 - 2, EpsLaurent(1));
  c *= 1 / factorial_product({k1, k2});
  return c.shifted(-2);
}

EpsLaurent two_point(int k1, int k2) { return two_point(k1, k2, default_depth({k1, k2})); }

namespace {

// Dense polynomial in u = eps/2 with integer coefficients; c[i] multiplies u^i.
// The contraction kernel runs on these because integer multiply-add avoids the
// gcd normalisation that dominates rational arithmetic.
struct IntPoly {
  std::vector<mpz_class> c;
  bool is_zero() const { return c.empty(); }
};

void trim(IntPoly& p) {
  while (!p.c.empty() && p.c.back() == 0) p.c.pop_back();
}

// acc += a * b
void mul_add(IntPoly& acc, const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return;
  const std::size_t size = a.c.size() + b.c.size() - 1;
  if (acc.c.size() < size) acc.c.resize(size);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (sgn(a.c[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      if (sgn(b.c[j]) == 0) continue;
      mpz_addmul(acc.c[i + j].get_mpz_t(), a.c[i].get_mpz_t(), b.c[j].get_mpz_t());
    }
  }
}

using IntMat = Mat2<IntPoly>;

// acc += x * y
void mat_mul_add(IntMat& acc, const IntMat& x, const IntMat& y) {
  mul_add(acc.a11, x.a11, y.a11);
  mul_add(acc.a11, x.a12, y.a21);
  mul_add(acc.a12, x.a11, y.a12);
  mul_add(acc.a12, x.a12, y.a22);
  mul_add(acc.a21, x.a21, y.a11);
  mul_add(acc.a21, x.a22, y.a21);
  mul_add(acc.a22, x.a21, y.a12);
  mul_add(acc.a22, x.a22, y.a22);
}

// acc += tr(x * y)
void trace_mul_add(IntPoly& acc, const IntMat& x, const IntMat& y) {
  mul_add(acc, x.a11, y.a11);
  mul_add(acc, x.a12, y.a21);
  mul_add(acc, x.a21, y.a12);
  mul_add(acc, x.a22, y.a22);
}

// Coefficient matrices R_{-i}, i = 0..count-1, as integer polynomials in u
// scaled by a common denominator; access beyond the resolvent depth throws.
class CoefficientTable {
 public:
  CoefficientTable(const ResolventBundle& bundle, int count) : depth_(bundle.depth) {
    const int known = std::min(count, bundle.depth + 1);
    std::vector<Mat2<EpsLaurent>> exact;
    for (int i = 0; i < known; ++i) exact.push_back(coeff_matrix(bundle.r, -i));
    // In u = eps/2 the coefficient of u^m is c_m 2^m.
    auto in_u = [](int m, const Rational& c) { return Rational(c * Rational(pow(BigInt(2), static_cast<unsigned>(m)))); };
    denominator_ = 1;
    auto visit = [&](const EpsLaurent& p) {
      for (const auto& [m, c] : p.terms()) {
        if (m < 0) throw MalformedValue("resolvent entry with negative eps power");
        mpz_lcm(denominator_.get_mpz_t(), denominator_.get_mpz_t(), in_u(m, c).get_den_mpz_t());
      }
    };
    for (const auto& m : exact) {
      visit(m.a11), visit(m.a12), visit(m.a21), visit(m.a22);
    }
    auto convert = [&](const EpsLaurent& p) {
      IntPoly out;
      for (const auto& [m, c] : p.terms()) {
        if (out.c.size() <= static_cast<std::size_t>(m)) out.c.resize(static_cast<std::size_t>(m) + 1);
        Rational scaled = in_u(m, c) * Rational(denominator_);
        out.c[static_cast<std::size_t>(m)] = scaled.get_num();
      }
      return out;
    };
    for (const auto& m : exact) mats_.push_back(m.map(convert));
  }

  const IntMat& at(int r) const {
    if (-r >= static_cast<int>(mats_.size())) throw DepthExceeded(r, depth_);
    return mats_[static_cast<std::size_t>(-r)];
  }

  /// Undoes the u-substitution and the scaling of `factors` table entries.
  EpsLaurent to_eps(const IntPoly& p, int factors) const {
    const BigInt scale = pow(denominator_, static_cast<unsigned>(factors));
    std::vector<EpsLaurent::Term> terms;
    for (std::size_t m = 0; m < p.c.size(); ++m) {
      if (p.c[m] == 0) continue;
      Rational c(p.c[m], BigInt(scale * pow(BigInt(2), static_cast<unsigned>(m))));
      c.canonicalize();
      terms.emplace_back(static_cast<int>(m), c);
    }
    return EpsLaurent::from_terms(std::move(terms));
  }

 private:
  int depth_;
  BigInt denominator_;
  std::vector<IntMat> mats_;
};

// One cyclic representative sigma (sigma.back() == n-1) of the trace formula:
// coefficient of prod lambda^e in tr[R(l_s0)...R(l_s{n-1})] / prod_t (l_st - l_s{t+1}),
// every denominator expanded with the smaller-index variable as the larger one.
// Edge t with summation index j contributes lambda_lo^{-j-1} lambda_hi^{j}.
// Returns the scaled integer polynomial, sign included.
IntPoly cyclic_term(const std::vector<int>& sigma, const std::vector<int>& e, int budget,
                    const CoefficientTable& table) {
  const int n = static_cast<int>(sigma.size());
  auto next = [&](int t) { return sigma[static_cast<std::size_t>((t + 1) % n)]; };
  auto at = [&](int t) { return sigma[static_cast<std::size_t>(t)]; };
  auto contrib = [&](int t, int v, int j) { return v == std::min(at(t), next(t)) ? -j - 1 : j; };
  // Admissible j on the outgoing edge of position t given the incoming contribution,
  // so that the R-exponent stays in [-budget, 0].
  auto j_range = [&](int t, int v, int cin) -> std::pair<int, int> {
    const int ev = e[static_cast<std::size_t>(v)];
    if (v == std::min(at(t), next(t))) return {std::max(0, -budget - ev + cin - 1), -ev + cin - 1};
    return {std::max(0, ev - cin), ev - cin + budget};
  };
  auto r_exp = [&](int v, int cin, int cout) { return e[static_cast<std::size_t>(v)] - cin - cout; };

  int sign = 1;
  for (int t = 0; t < n; ++t) {
    if (at(t) > next(t)) sign = -sign;
  }

  IntPoly total;
  const int last = n - 1;
  const int v_last = at(last);
  const int jl_max = budget + e[static_cast<std::size_t>(v_last)];
  for (int jl = 0; jl <= jl_max; ++jl) {
    std::map<int, IntMat> states;
    {
      const int v = at(0);
      const int cin = contrib(last, v, jl);
      auto [lo, hi] = j_range(0, v, cin);
      for (int j = lo; j <= hi; ++j) {
        const int r = r_exp(v, cin, contrib(0, v, j));
        if (r < -budget || r > 0) continue;
        states.emplace(j, table.at(r));
      }
    }
    for (int t = 1; t < last && !states.empty(); ++t) {
      const int v = at(t);
      std::map<int, IntMat> advanced;
      for (const auto& [jp, m] : states) {
        const int cin = contrib(t - 1, v, jp);
        auto [lo, hi] = j_range(t, v, cin);
        for (int j = lo; j <= hi; ++j) {
          const int r = r_exp(v, cin, contrib(t, v, j));
          if (r < -budget || r > 0) continue;
          mat_mul_add(advanced[j], m, table.at(r));
        }
      }
      states = std::move(advanced);
    }
    for (const auto& [jp, m] : states) {
      const int cin = contrib(last - 1, v_last, jp);
      const int r = r_exp(v_last, cin, contrib(last, v_last, jl));
      if (r < -budget || r > 0) continue;
      trace_mul_add(total, m, table.at(r));
    }
  }
  if (sign < 0) {
    for (auto& x : total.c) x = -x;
  }
  return total;
}

// sum += p
void add_into(IntPoly& sum, const IntPoly& p) {
  if (sum.c.size() < p.c.size()) sum.c.resize(p.c.size());
  for (std::size_t i = 0; i < p.c.size(); ++i) sum.c[i] += p.c[i];
}

void check_variable_count(int n) {
  if (n < 2 || n > kMaxVariables) {
    throw InvalidArgument("n-point formula needs 2.." + std::to_string(kMaxVariables) + " insertions");
  }
}

}  // namespace

EpsLaurent n_point_coefficient(const std::vector<int>& exponents, int depth, int jobs) {
  const int n = static_cast<int>(exponents.size());
  check_variable_count(n);
  // Each R factor contributes lambda^r with r <= 0 and the denominators have
  // total degree -n, so the R exponents sum to -budget and each lies in [-budget, 0].
  const int budget = -std::accumulate(exponents.begin(), exponents.end(), 0) - n;
  if (budget < 0) return {};
  auto bundle = shared_resolvent(depth);
  const CoefficientTable table(*bundle, budget + 1);

  std::vector<std::vector<int>> reps;
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    reps.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end() - 1));

  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(reps.size())));
  std::vector<IntPoly> partial(static_cast<std::size_t>(workers));
  auto work = [&](int w) {
    for (std::size_t i = static_cast<std::size_t>(w); i < reps.size(); i += static_cast<std::size_t>(workers)) {
      add_into(partial[static_cast<std::size_t>(w)], cyclic_term(reps[i], exponents, budget, table));
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          work(w);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (auto& err : errors) {
      if (err) std::rethrow_exception(err);
    }
  }
  IntPoly sum;
  for (const auto& p : partial) add_into(sum, p);
  trim(sum);
  return -table.to_eps(sum, n);
}

EpsLaurent n_point(const std::vector<int>& ks, int depth, int jobs) {
  const int n = static_cast<int>(ks.size());
  if (n < 3 || n > kMaxVariables) throw InvalidArgument("n_point needs 3..8 insertions");
  for (int k : ks) {
    if (k < 0) throw InvalidArgument("insertion indices must be non-negative");
  }
  std::vector<int> exps;
  for (int k : ks) exps.push_back(-k - 2);
  EpsLaurent c = n_point_coefficient(exps, depth, jobs);
  for (int i = 0; i < n; ++i) {
    std::vector<int> probe = exps;
    probe[static_cast<std::size_t>(i)] = 1;
    if (!n_point_coefficient(probe, depth, jobs).is_zero()) {
      throw CancellationFailure("positive power of lambda_" + std::to_string(i + 1) +
                                " survived the cyclic sum");
    }
  }
  c *= 1 / factorial_product(ks);
  return c.shifted(-n);
}

EpsLaurent n_point(const std::vector<int>& ks) { return n_point(ks, default_depth(ks)); }

namespace {

// Truncated series taken as an exact polynomial; used where the caller knows
// a sharper validity window than per-variable bookkeeping would give.
MultiSeries polynomial_embed(const LambdaSeries& s, int var, int n) {
  MultiSeries m(n);
  for (const auto& [e, c] : s.terms()) {
    MultiSeries::Exponents ex(static_cast<std::size_t>(n), 0);
    ex[static_cast<std::size_t>(var)] = e;
    m.add_to(ex, c);
  }
  return m;
}

// 1/(l_a - l_b) in the regime of the smaller index dominating, kept to the
// terms l_big^{-j-1} with j + 1 <= edge_depth.
MultiSeries edge_polynomial(int n, int a, int b, int edge_depth) {
  const int big = std::min(a, b), small = std::max(a, b);
  const int sign = a < b ? 1 : -1;
  MultiSeries m(n);
  for (int j = 0; j + 1 <= edge_depth; ++j) {
    MultiSeries::Exponents ex(static_cast<std::size_t>(n), 0);
    ex[static_cast<std::size_t>(small)] = j;
    ex[static_cast<std::size_t>(big)] = -j - 1;
    m.add_to(ex, EpsLaurent(sign));
  }
  return m;
}

}  // namespace

int n_point_expansion_window(int n, int resolvent_depth, int edge_depth) {
  return std::min(edge_depth / (n - 1), resolvent_depth / n + 1);
}

MultiSeries n_point_expansion(int n, int resolvent_depth, int edge_depth) {
  if (n < 3 || n > kMaxVariables) throw InvalidArgument("n_point_expansion needs 3..8 variables");
  auto bundle = shared_resolvent(resolvent_depth);
  std::vector<Mat2<MultiSeries>> r;
  for (int v = 0; v < n; ++v) {
    r.push_back(bundle->r.map([&](const LambdaSeries& s) { return polynomial_embed(s, v, n); }));
  }
  MultiSeries total(n);
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    Mat2<MultiSeries> prod = r[static_cast<std::size_t>(sigma[0])];
    for (int t = 1; t < n; ++t) prod = prod * r[static_cast<std::size_t>(sigma[static_cast<std::size_t>(t)])];
    MultiSeries term = trace(prod);
    for (int t = 0; t < n; ++t) {
      term = term * edge_polynomial(n, sigma[static_cast<std::size_t>(t)],
                                    sigma[static_cast<std::size_t>((t + 1) % n)], edge_depth);
    }
    total += term;
  } while (std::next_permutation(sigma.begin(), sigma.end() - 1));

  // For the top-k variables S, the sum of their final exponents is at most
  // -(j_e + 1) for every edge e leaving S, so exponents >= -M force
  // j_e + 1 <= (n-1) M; the R exponents then lie in [-n(M-1), 0].
  const int window = n_point_expansion_window(n, resolvent_depth, edge_depth);
  for (int v = 0; v < n; ++v) total.set_depth(v, window);
  return EpsLaurent(-1) * total;
}

std::vector<GenusDegreeValue> split_by_genus(const CorrelatorKey& key, const EpsLaurent& value) {
  const int total = key.total_degree();
  if (total % 2 != 0) {
    if (!value.is_zero()) throw MalformedValue("odd total degree but nonzero value");
    return {};
  }
  const int half = total / 2;
  for (const auto& [e, c] : value.terms()) {
    if (e % 2 != 0 || e < -2 || e > total) {
      throw MalformedValue("eps^" + std::to_string(e) + " is not of the form eps^{2g-2} with 0 <= g <= " +
                           std::to_string(half + 1));
    }
  }
  std::vector<GenusDegreeValue> rows;
  for (int g = 0; g <= half + 1; ++g) rows.push_back({g, half + 1 - g, value.coeff(2 * g - 2)});
  return rows;
}

int default_depth(const std::vector<int>& ks) {
  if (ks.size() == 2) return ks[0] + ks[1] + 4;
  int d = 0;
  for (int k : ks) d += k + 2;
  return d;
}

namespace {

EpsLaurent evaluate_at(const std::vector<int>& ks, int depth, int jobs) {
  if (ks.size() == 2) return two_point(ks[0], ks[1], depth);
  return n_point(ks, depth, jobs);
}

}  // namespace

bool stability_check(const std::vector<int>& ks, int depth_low, int depth_high, int jobs) {
  if (depth_high < depth_low + 2) throw InvalidArgument("stability check needs depth_high >= depth_low + 2");
  if (ks.size() < 2) throw InvalidArgument("stability check applies to n >= 2");
  if (evaluate_at(ks, depth_low, jobs) != evaluate_at(ks, depth_high, jobs)) {
    throw UnstableExtraction("extraction differs between depths " + std::to_string(depth_low) + " and " +
                             std::to_string(depth_high));
  }
  return true;
}

CorrelatorRecord correlator(const std::vector<int>& ks, const EngineOptions& options) {
  CorrelatorRecord rec;
  rec.key = make_key(ks);
  const int n = rec.key.size();
  if (n > kMaxVariables) throw InvalidArgument("at most 8 insertions are supported");
  if (options.jobs < 1) throw InvalidArgument("jobs must be >= 1");
  const auto& sorted = rec.key.insertions;

  if (rec.key.total_degree() % 2 != 0) {
    rec.stability_verified = true;
    return rec;
  }
  if (n == 1) {
    rec.value = one_point(sorted[0]);
    rec.stability_verified = true;
    rec.by_genus = split_by_genus(rec.key, rec.value);
    return rec;
  }

  constexpr int kStep = 4;
  constexpr int kMaxEscalations = 3;
  int depth = options.depth_override.value_or(default_depth(sorted));
  for (int attempt = 0; attempt <= kMaxEscalations; ++attempt, depth += kStep) {
    EpsLaurent value;
    try {
      value = evaluate_at(sorted, depth, options.jobs);
      if (options.stability && evaluate_at(sorted, depth + kStep, options.jobs) != value) continue;
    } catch (const DepthExceeded&) {
      continue;
    }
    rec.value = std::move(value);
    rec.depth_used = depth;
    rec.stability_verified = options.stability;
    rec.by_genus = split_by_genus(rec.key, rec.value);
    return rec;
  }
  throw UnstableExtraction("no stable extraction after " + std::to_string(kMaxEscalations) + " depth escalations");
}

}  // namespace p1gw
