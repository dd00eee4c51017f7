#pragma once

#include <Eigen/Dense>
#include <complex>

namespace geoquant {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using cplx = std::complex<double>;

// Relative singular-value threshold used for every kernel/rank decision.
inline constexpr double kKernelRelTol = 1e-10;

// Condition-number guard for the small solves in the vacuum-form correspondence.
inline constexpr double kCondGuard = 1e12;

// Linear phase space carrying a symplectic potential.
//
// The bilinear bracket is [xi, tau] = xi^T T tau, the symplectic form is
// omega(xi, tau) = xi^T W tau with W = (T - T^T)/2.  M is the right kernel
// of T (the momentum subspace), N the right kernel of T^T; both have
// dimension dim/2 and are complementary.  Configuration space Q = L/M is
// represented in coordinates by the frame q(basis_n) throughout, so
// quotient() returns coefficients with respect to the columns of basis_n.
struct PhaseSpace {
  int dim = 0;   // 2n
  Mat T;         // bracket matrix
  Mat W;         // symplectic form, antisymmetric invertible
  Mat basis_m;   // dim x n, columns span M
  Mat basis_n;   // dim x n, columns span N
  Mat q_map;     // n x dim, Q coordinates of the projection along M
  Mat m_map;     // n x dim, M coefficients of the projection along N

  int n() const { return dim / 2; }

  double bracket(const Vec& xi, const Vec& tau) const;
  double omega(const Vec& xi, const Vec& tau) const;
  cplx bracket_c(const CVec& xi, const CVec& tau) const;
  cplx omega_c(const CVec& xi, const CVec& tau) const;

  // Q coordinates of xi + M, in the basis_n frame.
  Vec quotient(const Vec& xi) const;
  CVec quotient_c(const CVec& xi) const;

  // Representative in N of a configuration vector (the section i_N).
  Vec lift(const Vec& phi) const;

  // Bracket against a configuration argument: [xi, tau] for any tau with
  // q(tau) = phi; well defined because M is the right kernel of T.
  double bracket_q(const Vec& xi, const Vec& phi) const;
};

// Builds the phase space from a bracket matrix.  Throws std::invalid_argument
// if T is not square with even dimension, if W is singular, if the kernels of
// T and T^T do not both have dimension dim/2, or if M + N is not the whole
// space.
PhaseSpace build_phase_space(const Mat& T);

// Builds the bracket from a symplectic form and a given Lagrangian splitting:
// [m + n, m' + n'] = 2 omega(m, n').  The provided bases are kept verbatim as
// basis_m / basis_n.  Throws if W is not antisymmetric and invertible, if the
// bases are rank deficient or not complementary, or if either subspace fails
// to be Lagrangian.
PhaseSpace bracket_from_splitting(const Mat& W, const Mat& basis_m, const Mat& basis_n);

// Orthonormal basis of the kernel of A (columns), relative threshold
// kKernelRelTol * sigma_max.
Mat kernel_basis(const Mat& A);

}  // namespace geoquant
