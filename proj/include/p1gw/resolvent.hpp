#pragma once

#include <memory>

#include "p1gw/lambda_series.hpp"

namespace p1gw {

/// The matrix resolvent R(lambda; eps) and its building blocks, all exact
/// through lambda^{-depth}.
///
///   R = diag(1, 0) + [[alpha, beta], [gamma, -alpha]],
///   beta = Q - P,  gamma = Q + P.
struct ResolventBundle {
  LambdaSeries alpha;
  LambdaSeries p;
  LambdaSeries q;
  LambdaSeries beta;
  LambdaSeries gamma;
  ResolventMatrix r;
  int depth = 0;
};

/// alpha = sum_j lambda^{-2j-2} 4^{-j} sum_{i<=j} eps^{2(j-i)} / (i!(i+1)!)
///         * sum_{l<=i} (-1)^l (2i+1-2l)^{2j+1} C(2i+1, l)
LambdaSeries alpha_series(int depth);

/// P = sum_j lambda^{-2j-1} 4^{-j} sum_{i<=j} eps^{2(j-i)} / i!^2
///     * sum_{l<=i} (-1)^l (2i+1-2l)^{2j} (C(2i, l) - C(2i, l-1))
LambdaSeries p_series(int depth);

/// Q = -1/2 sum_j lambda^{-2j-2} 4^{-j} sum_{i<=j} eps^{2(j-i)+1} (2i+1) / i!^2
///     * (the same inner sum as P)
LambdaSeries q_series(int depth);

/// Assembles alpha, P, Q into beta, gamma and R from already-built parts.
ResolventBundle assemble_resolvent(LambdaSeries alpha, LambdaSeries p, LambdaSeries q);

ResolventBundle build_resolvent(int depth);

/// The same bundle seen only through lambda^{-depth}.
ResolventBundle truncated(const ResolventBundle& b, int depth);

/// det R = -alpha - alpha^2 - beta*gamma.
LambdaSeries resolvent_determinant(const ResolventBundle& b);

/// Process-wide memo of resolvents. Returns a bundle of exactly the requested
/// depth, truncating a deeper cached build when one exists. Thread-safe.
std::shared_ptr<const ResolventBundle> shared_resolvent(int depth);

/// Registers an externally loaded bundle (e.g. from the on-disk cache).
void seed_shared_resolvent(std::shared_ptr<const ResolventBundle> bundle);

/// Deepest bundle built or seeded so far, or null.
std::shared_ptr<const ResolventBundle> deepest_shared_resolvent();

}  // namespace p1gw
