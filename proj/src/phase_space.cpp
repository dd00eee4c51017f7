#include "geoquant/phase_space.hpp"

#include <stdexcept>

namespace geoquant {

namespace {

double cond_estimate(const Mat& A) {
  Eigen::JacobiSVD<Mat> svd(A);
  double smin = svd.singularValues()(svd.singularValues().size() - 1);
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return svd.singularValues()(0) / smin;
}

// Shared tail: fills q_map / m_map from the component bases and validates
// complementarity.
void finish(PhaseSpace& ps) {
  const int d = ps.dim;
  const int n = d / 2;
  Mat frame(d, d);
  frame.leftCols(n) = ps.basis_n;
  frame.rightCols(n) = ps.basis_m;
  if (cond_estimate(frame) > kCondGuard)
    throw std::invalid_argument("phase space: M + N does not span the whole space");
  Mat inv = frame.inverse();
  ps.q_map = inv.topRows(n);
  ps.m_map = inv.bottomRows(n);
}

}  // namespace

double PhaseSpace::bracket(const Vec& xi, const Vec& tau) const { return xi.dot(T * tau); }
double PhaseSpace::omega(const Vec& xi, const Vec& tau) const { return xi.dot(W * tau); }

cplx PhaseSpace::bracket_c(const CVec& xi, const CVec& tau) const {
  return xi.transpose() * T.cast<cplx>() * tau;
}
cplx PhaseSpace::omega_c(const CVec& xi, const CVec& tau) const {
  return xi.transpose() * W.cast<cplx>() * tau;
}

Vec PhaseSpace::quotient(const Vec& xi) const { return q_map * xi; }
CVec PhaseSpace::quotient_c(const CVec& xi) const { return q_map.cast<cplx>() * xi; }
Vec PhaseSpace::lift(const Vec& phi) const { return basis_n * phi; }

double PhaseSpace::bracket_q(const Vec& xi, const Vec& phi) const {
  return bracket(xi, lift(phi));
}

Mat kernel_basis(const Mat& A) {
  Eigen::JacobiSVD<Mat> svd(A, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double smax = sv.size() ? sv(0) : 0.0;
  double tol = kKernelRelTol * smax;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > tol) ++rank;
  return svd.matrixV().rightCols(A.cols() - rank);
}

PhaseSpace build_phase_space(const Mat& T) {
  if (T.rows() != T.cols()) throw std::invalid_argument("phase space: T must be square");
  const int d = static_cast<int>(T.rows());
  if (d == 0 || d % 2 != 0)
    throw std::invalid_argument("phase space: dimension must be even and positive");

  PhaseSpace ps;
  ps.dim = d;
  ps.T = T;
  ps.W = 0.5 * (T - T.transpose());
  if (cond_estimate(ps.W) > kCondGuard)
    throw std::invalid_argument("phase space: symplectic form is singular");

  ps.basis_m = kernel_basis(T);
  ps.basis_n = kernel_basis(Mat(T.transpose()));
  if (ps.basis_m.cols() != d / 2 || ps.basis_n.cols() != d / 2)
    throw std::invalid_argument("phase space: kernel dimensions of T and T^T must both be dim/2");

  finish(ps);
  return ps;
}

PhaseSpace bracket_from_splitting(const Mat& W, const Mat& basis_m, const Mat& basis_n) {
  const int d = static_cast<int>(W.rows());
  if (W.cols() != d || d == 0 || d % 2 != 0)
    throw std::invalid_argument("splitting: W must be square with even dimension");
  if ((W + W.transpose()).norm() > 1e-12 * (1.0 + W.norm()))
    throw std::invalid_argument("splitting: W must be antisymmetric");
  if (cond_estimate(W) > kCondGuard)
    throw std::invalid_argument("splitting: W must be invertible");
  const int n = d / 2;
  if (basis_m.rows() != d || basis_n.rows() != d || basis_m.cols() != n || basis_n.cols() != n)
    throw std::invalid_argument("splitting: bases must be dim x dim/2");

  double scale = 1.0 + W.norm();
  if ((basis_m.transpose() * W * basis_m).norm() > 1e-10 * scale)
    throw std::invalid_argument("splitting: M is not Lagrangian");
  if ((basis_n.transpose() * W * basis_n).norm() > 1e-10 * scale)
    throw std::invalid_argument("splitting: N is not Lagrangian");

  PhaseSpace ps;
  ps.dim = d;
  ps.W = W;
  ps.basis_m = basis_m;
  ps.basis_n = basis_n;
  finish(ps);

  // [xi, tau] = 2 omega(p_M xi, p_N tau) with the projections taken along the
  // complementary member of the splitting.
  Mat p_m = basis_m * ps.m_map;
  Mat p_n = basis_n * ps.q_map;
  ps.T = 2.0 * p_m.transpose() * W * p_n;
  return ps;
}

}  // namespace geoquant
