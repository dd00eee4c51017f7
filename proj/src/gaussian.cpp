#include "geoquant/gaussian.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace geoquant {

namespace {

// Nodes and probability weights for the one dimensional standard Gaussian
// pi^{-1/2} exp(-x^2), by Golub-Welsch on the Hermite Jacobi matrix.
void hermite_rule(int order, Vec& nodes, Vec& weights) {
  Mat J = Mat::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    double b = std::sqrt(0.5 * k);
    J(k, k - 1) = b;
    J(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(J);
  nodes = es.eigenvalues();
  weights.resize(order);
  for (int i = 0; i < order; ++i) {
    double v = es.eigenvectors()(0, i);
    weights(i) = v * v;
  }
  weights /= weights.sum();
}

cplx pairwise_sum(std::vector<cplx>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return v[lo];
  std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

}  // namespace

Mat GaussianMeasure::covariance() const { return 0.5 * P.inverse(); }

GaussianMeasure make_gaussian(const Mat& P) {
  if (P.rows() != P.cols() || P.rows() == 0)
    throw std::invalid_argument("gaussian measure: P must be square");
  if ((P - P.transpose()).norm() > 1e-10 * (1.0 + P.norm()))
    throw std::invalid_argument("gaussian measure: P must be symmetric");
  Eigen::SelfAdjointEigenSolver<Mat> es(P);
  if (es.eigenvalues()(0) <= 0.0)
    throw std::invalid_argument("gaussian measure: P must be positive definite");
  GaussianMeasure mu;
  mu.d = static_cast<int>(P.rows());
  mu.P = 0.5 * (P + P.transpose());
  double logdet = es.eigenvalues().array().log().sum();
  mu.Z = std::exp(0.5 * logdet - 0.5 * mu.d * std::log(M_PI));
  return mu;
}

int default_quadrature_order(int d) {
  switch (d) {
    case 1: return 40;
    case 2: return 20;
    default: return 12;
  }
}

QuadratureGrid gauss_hermite_grid(const GaussianMeasure& mu, int order) {
  if (order < 1) throw std::invalid_argument("quadrature: order must be positive");
  double budget = double(mu.d) * std::pow(double(order), mu.d);
  if (budget > 1e7) throw std::runtime_error("quadrature: evaluation budget exceeded");

  Vec n1, w1;
  hermite_rule(order, n1, w1);

  // x = P^{-1/2} u maps the standard weight exp(-u.u) to exp(-x^T P x).
  Eigen::SelfAdjointEigenSolver<Mat> es(mu.P);
  Mat C = es.eigenvectors()
          * es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal()
          * es.eigenvectors().transpose();

  long npts = 1;
  for (int k = 0; k < mu.d; ++k) npts *= order;
  QuadratureGrid g;
  g.nodes.resize(mu.d, npts);
  g.weights.resize(npts);
  std::vector<int> idx(mu.d, 0);
  for (long p = 0; p < npts; ++p) {
    Vec u(mu.d);
    double w = 1.0;
    for (int k = 0; k < mu.d; ++k) {
      u(k) = n1(idx[k]);
      w *= w1(idx[k]);
    }
    g.nodes.col(p) = C * u;
    g.weights(p) = w;
    for (int k = mu.d - 1; k >= 0; --k) {
      if (++idx[k] < order) break;
      idx[k] = 0;
    }
  }
  return g;
}

cplx gaussian_moment(const GaussianMeasure& mu, const MultiIndex& alpha) {
  if (static_cast<int>(alpha.size()) != mu.d)
    throw std::invalid_argument("gaussian moment: index size mismatch");
  WickMoments wick(mu.covariance().cast<cplx>());
  return wick.moment(alpha);
}

cplx integrate(const std::function<cplx(const Vec&)>& f, const GaussianMeasure& mu,
               int order) {
  QuadratureGrid g = gauss_hermite_grid(mu, order);
  std::vector<cplx> vals(g.weights.size());
  for (long i = 0; i < g.weights.size(); ++i) vals[i] = g.weights(i) * f(g.nodes.col(i));
  return pairwise_sum(vals, 0, vals.size());
}

cplx integrate_mc(const std::function<cplx(const Vec&)>& f, const GaussianMeasure& mu,
                  int nsamples, std::uint64_t seed) {
  if (nsamples < 1) throw std::invalid_argument("monte carlo: nsamples must be positive");
  Eigen::SelfAdjointEigenSolver<Mat> es(mu.P);
  Mat C = es.eigenvectors()
          * (2.0 * es.eigenvalues()).cwiseSqrt().cwiseInverse().asDiagonal()
          * es.eigenvectors().transpose();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cplx> vals(nsamples);
  Vec u(mu.d);
  for (int i = 0; i < nsamples; ++i) {
    for (int k = 0; k < mu.d; ++k) u(k) = gauss(rng);
    vals[i] = f(C * u);
  }
  return pairwise_sum(vals, 0, vals.size()) / double(nsamples);
}

}  // namespace geoquant
