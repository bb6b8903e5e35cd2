#pragma once

#include <functional>

#include "qhecke/series.hpp"

namespace qhecke {

// A Bailey pair relative to 1 in base q^base: sequences alpha_R and beta_N
// with beta_N = sum_{R=0}^{N} alpha_R / ((q^base;q^base)_{N-R} (q^base;q^base)_{N+R}).
// beta takes (N, order) because it is generally a true series.
template <CoeffRing R>
struct BaileyPair {
  Exp base;
  std::function<Series<R>(Exp)> alpha;
  std::function<Series<R>(Exp, Exp)> beta;
};

// A conjugate pair in the same base: gamma_R = sum_{N>=R} delta_N /
// ((q^base;q^base)_{N-R} (q^base;q^base)_{N+R}). The N-sum converges
// coefficientwise only when delta_N's lowest exponent grows without bound.
template <CoeffRing R>
struct ConjugatePair {
  Exp base;
  std::function<Series<R>(Exp, Exp)> delta;
  std::function<Series<R>(Exp, Exp)> gamma;
};

// beta_N minus its defining alpha-sum; identically zero within the window
// when the pair is genuine.
template <CoeffRing R>
Series<R> bailey_relation_diff(const BaileyPair<R>& bp, Exp N, Exp order) {
  const R one = R::one();
  auto rhs = Series<R>::zero(order);
  for (Exp r = 0; r <= N; ++r) {
    auto den = pochhammer(one, bp.base, bp.base, N - r) *
               pochhammer(one, bp.base, bp.base, N + r);
    rhs = rhs + (bp.alpha(r) * den.invert_to(order)).truncated(order);
  }
  return bp.beta(N, order) - rhs;
}

// gamma_R minus its defining delta-sum.
template <CoeffRing R>
Series<R> conjugate_relation_diff(const ConjugatePair<R>& cp, Exp r, Exp order) {
  const R one = R::one();
  auto rhs = Series<R>::zero(order);
  for (Exp n = r;; ++n) {
    auto d = cp.delta(n, order);
    if (d.lo_effective() >= order) break;
    auto den = pochhammer(one, cp.base, cp.base, n - r) *
               pochhammer(one, cp.base, cp.base, n + r);
    rhs = rhs + (d * den.invert_to(order)).truncated(order);
  }
  return cp.gamma(r, order) - rhs;
}

// sum_N beta_N delta_N minus sum_R alpha_R gamma_R, the two sides of the
// Bailey transform.
template <CoeffRing R>
Series<R> bailey_transform_diff(const BaileyPair<R>& bp, const ConjugatePair<R>& cp,
                                Exp order) {
  auto lhs = Series<R>::zero(order);
  for (Exp n = 0;; ++n) {
    auto d = cp.delta(n, order);
    if (d.lo_effective() >= order) break;
    lhs = lhs + (bp.beta(n, order) * d).truncated(order);
  }
  auto rhs = Series<R>::zero(order);
  for (Exp r = 0;; ++r) {
    auto a = bp.alpha(r);
    auto g = cp.gamma(r, order);
    if (a.lo_effective() + g.lo_effective() >= order) break;
    rhs = rhs + (a * g).truncated(order);
  }
  return lhs - rhs;
}

}  // namespace qhecke
