#pragma once

#include <functional>

#include "geoquant/polynomial.hpp"

namespace geoquant {

// Normalized Gaussian measure with density Z exp(-x^T P x) against Lebesgue
// measure, Z = pi^{-d/2} det(P)^{1/2}.
struct GaussianMeasure {
  int d = 0;
  Mat P;
  double Z = 0.0;

  // Covariance of the measure, (2P)^{-1}.
  Mat covariance() const;
};

// Throws if P is not symmetric positive definite.
GaussianMeasure make_gaussian(const Mat& P);

// Tensor Gauss-Hermite grid adapted to the measure.  Exact for polynomial
// integrands of per-variable degree <= 2*order - 1; weights sum to one.
// Throws if the evaluation budget d * order^d exceeds 1e7.
struct QuadratureGrid {
  Mat nodes;    // d x npoints
  Vec weights;  // npoints
};
QuadratureGrid gauss_hermite_grid(const GaussianMeasure& mu, int order);

// Default orders keyed by dimension: 40 / 20 / 12 for d = 1 / 2 / 3.
int default_quadrature_order(int d);

// Exact centered moment E[x^alpha] of the measure, by Wick pairing.
cplx gaussian_moment(const GaussianMeasure& mu, const MultiIndex& alpha);

// Quadrature of f against the measure with deterministic pairwise summation.
cplx integrate(const std::function<cplx(const Vec&)>& f, const GaussianMeasure& mu,
               int order);

// Seeded Monte Carlo fallback for d > 3 demonstrations; not used by any
// verification path.
inline constexpr std::uint64_t kMonteCarloSeed = 0xC0FFEE;
cplx integrate_mc(const std::function<cplx(const Vec&)>& f, const GaussianMeasure& mu,
                  int nsamples, std::uint64_t seed = kMonteCarloSeed);

}  // namespace geoquant
