#include "p1gw/resolvent.hpp"

#include <map>
#include <mutex>

#include "p1gw/errors.hpp"

namespace p1gw {

namespace {

void require_depth(int depth) {
  if (depth < 0) throw InvalidArgument("resolvent depth must be non-negative");
}

// sum_{l=0}^{i} (-1)^l (2i+1-2l)^power (C(2i, l) - C(2i, l-1))
BigInt pq_inner_sum(int i, unsigned power) {
  BigInt acc = 0;
  for (int l = 0; l <= i; ++l) {
    BigInt term = pow(BigInt(2 * i + 1 - 2 * l), power) * (binomial(2 * i, l) - binomial(2 * i, l - 1));
    if (l % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

}  // namespace

LambdaSeries alpha_series(int depth) {
  require_depth(depth);
  LambdaSeries s = LambdaSeries::zero(depth);
  for (int j = 0; 2 * j + 2 <= depth; ++j) {
    const BigInt four_j = pow(BigInt(4), static_cast<unsigned>(j));
    std::vector<EpsLaurent::Term> terms;
    for (int i = 0; i <= j; ++i) {
      BigInt inner = 0;
      for (int l = 0; l <= i; ++l) {
        BigInt term = pow(BigInt(2 * i + 1 - 2 * l), static_cast<unsigned>(2 * j + 1)) * binomial(2 * i + 1, l);
        if (l % 2 == 0) {
          inner += term;
        } else {
          inner -= term;
        }
      }
      Rational c(inner, BigInt(four_j * factorial(i) * factorial(i + 1)));
      c.canonicalize();
      terms.emplace_back(2 * (j - i), c);
    }
    s.set(-2 * j - 2, EpsLaurent::from_terms(std::move(terms)));
  }
  return s;
}

LambdaSeries p_series(int depth) {
  require_depth(depth);
  LambdaSeries s = LambdaSeries::zero(depth);
  for (int j = 0; 2 * j + 1 <= depth; ++j) {
    const BigInt four_j = pow(BigInt(4), static_cast<unsigned>(j));
    std::vector<EpsLaurent::Term> terms;
    for (int i = 0; i <= j; ++i) {
      const BigInt fi = factorial(i);
      Rational c(pq_inner_sum(i, static_cast<unsigned>(2 * j)), BigInt(four_j * fi * fi));
      c.canonicalize();
      terms.emplace_back(2 * (j - i), c);
    }
    s.set(-2 * j - 1, EpsLaurent::from_terms(std::move(terms)));
  }
  return s;
}

LambdaSeries q_series(int depth) {
  require_depth(depth);
  LambdaSeries s = LambdaSeries::zero(depth);
  for (int j = 0; 2 * j + 2 <= depth; ++j) {
    const BigInt four_j = pow(BigInt(4), static_cast<unsigned>(j));
    std::vector<EpsLaurent::Term> terms;
    for (int i = 0; i <= j; ++i) {
      const BigInt fi = factorial(i);
      Rational c(BigInt(-(2 * i + 1) * pq_inner_sum(i, static_cast<unsigned>(2 * j))), BigInt(2 * four_j * fi * fi));
      c.canonicalize();
      terms.emplace_back(2 * (j - i) + 1, c);
    }
    s.set(-2 * j - 2, EpsLaurent::from_terms(std::move(terms)));
  }
  return s;
}

ResolventBundle assemble_resolvent(LambdaSeries alpha, LambdaSeries p, LambdaSeries q) {
  ResolventBundle b;
  b.depth = std::min({alpha.depth(), p.depth(), q.depth()});
  b.alpha = alpha.truncated(b.depth);
  b.p = p.truncated(b.depth);
  b.q = q.truncated(b.depth);
  b.beta = b.q - b.p;
  b.gamma = b.q + b.p;
  b.r.a11 = LambdaSeries(1) + b.alpha;
  b.r.a12 = b.beta;
  b.r.a21 = b.gamma;
  b.r.a22 = -b.alpha;
  return b;
}

ResolventBundle build_resolvent(int depth) {
  return assemble_resolvent(alpha_series(depth), p_series(depth), q_series(depth));
}

ResolventBundle truncated(const ResolventBundle& b, int depth) {
  if (depth > b.depth) throw DepthExceeded(-depth, b.depth);
  return assemble_resolvent(b.alpha.truncated(depth), b.p.truncated(depth), b.q.truncated(depth));
}

LambdaSeries resolvent_determinant(const ResolventBundle& b) {
  return determinant(b.r);
}

namespace {

struct SharedResolvents {
  std::mutex mutex;
  std::map<int, std::shared_ptr<const ResolventBundle>> by_depth;
};

SharedResolvents& shared() {
  static SharedResolvents s;
  return s;
}

}  // namespace

std::shared_ptr<const ResolventBundle> shared_resolvent(int depth) {
  require_depth(depth);
  auto& s = shared();
  {
    std::lock_guard lock(s.mutex);
    auto it = s.by_depth.lower_bound(depth);
    if (it != s.by_depth.end()) {
      if (it->first == depth) return it->second;
      auto view = std::make_shared<const ResolventBundle>(truncated(*it->second, depth));
      s.by_depth.emplace(depth, view);
      return view;
    }
  }
  // Built outside the lock; concurrent duplicate builds are identical.
  auto built = std::make_shared<const ResolventBundle>(build_resolvent(depth));
  std::lock_guard lock(s.mutex);
  return s.by_depth.try_emplace(depth, built).first->second;
}

void seed_shared_resolvent(std::shared_ptr<const ResolventBundle> bundle) {
  auto& s = shared();
  std::lock_guard lock(s.mutex);
  s.by_depth[bundle->depth] = std::move(bundle);
}

std::shared_ptr<const ResolventBundle> deepest_shared_resolvent() {
  auto& s = shared();
  std::lock_guard lock(s.mutex);
  if (s.by_depth.empty()) return nullptr;
  return s.by_depth.rbegin()->second;
}

}  // namespace p1gw
