#include "geoquant/correspondence.hpp"

#include <stdexcept>

namespace geoquant {

namespace {

void check_cond(const Mat& A, const char* what) {
  Eigen::JacobiSVD<Mat> svd(A);
  const auto& sv = svd.singularValues();
  double smin = sv(sv.size() - 1);
  if (smin <= 0.0 || sv(0) / smin > kCondGuard) {
    throw std::invalid_argument(std::string("correspondence: ill conditioned solve in ") + what);
  }
}

// Pairing matrix P_{ab} = [m_a, n_b] of the M x N duality.
Mat pairing_matrix(const PhaseSpace& ps) {
  return ps.basis_m.transpose() * ps.T * ps.basis_n;
}

}  // namespace

double complex_structure_defect(const PhaseSpace& ps, const Mat& J) {
  const int d = ps.dim;
  double unit = 1.0 + J.norm();
  double d1 = (J * J + Mat::Identity(d, d)).norm() / unit;
  double d2 = (J.transpose() * ps.W * J - ps.W).norm() / (1.0 + ps.W.norm());
  Mat G = 2.0 * ps.W * J;
  double d3 = (G - G.transpose()).norm() / (1.0 + G.norm());
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (G + G.transpose()));
  double lmin = es.eigenvalues()(0);
  double d4 = lmin > 0.0 ? 0.0 : (1.0 + std::abs(lmin));
  return std::max(std::max(d1, d2), std::max(d3, d4));
}

ComplexStructure validate_complex_structure(const PhaseSpace& ps, const Mat& J, double tol) {
  if (J.rows() != ps.dim || J.cols() != ps.dim)
    throw std::invalid_argument("complex structure: wrong dimensions");
  if (complex_structure_defect(ps, J) > tol)
    throw std::invalid_argument("complex structure: compatibility defect above tolerance");
  return ComplexStructure{J};
}

Mat metric(const PhaseSpace& ps, const ComplexStructure& cs) { return 2.0 * ps.W * cs.J; }

cplx braces(const PhaseSpace& ps, const ComplexStructure& cs, const Vec& tau, const Vec& xi) {
  Mat G = metric(ps, cs);
  return tau.dot(G * xi) + cplx(0, 2) * ps.omega(tau, xi);
}

Mat j_map(const PhaseSpace& ps, const ComplexStructure& cs) {
  Mat jm = cs.J * ps.basis_m;           // basis of J M
  Mat coords = ps.q_map * jm;           // its Q coordinates
  check_cond(coords, "j_map");
  return jm * coords.inverse();
}

VacuumForm omega_from_j(const PhaseSpace& ps, const ComplexStructure& cs) {
  Mat j = j_map(ps, cs);
  Mat G = metric(ps, cs);
  VacuumForm vf;
  vf.S = j.transpose() * G * j;
  Mat a = -(j.transpose() * ps.T * ps.basis_n);
  vf.A = 0.5 * (a + a.transpose());
  vf.S = 0.5 * (vf.S + vf.S.transpose());
  return vf;
}

ComplexStructure j_from_omega(const PhaseSpace& ps, const VacuumForm& vf) {
  const int n = ps.n();
  if (vf.S.rows() != n || vf.S.cols() != n || vf.A.rows() != n || vf.A.cols() != n)
    throw std::invalid_argument("vacuum form: wrong dimensions");
  if ((vf.S - vf.S.transpose()).norm() > 1e-10 * (1.0 + vf.S.norm()))
    throw std::invalid_argument("vacuum form: S must be symmetric");
  if ((vf.A - vf.A.transpose()).norm() > 1e-10 * (1.0 + vf.A.norm()))
    throw std::invalid_argument("vacuum form: A must be symmetric");
  Eigen::SelfAdjointEigenSolver<Mat> es(vf.S);
  if (es.eigenvalues()(0) <= 0.0)
    throw std::invalid_argument("vacuum form: S must be positive definite");

  Mat P = pairing_matrix(ps);
  check_cond(P, "M x N pairing");
  check_cond(vf.S, "S");
  Mat Pti = P.transpose().inverse();
  Mat Si = vf.S.inverse();

  // For xi = n.a + m.b the graph subspace X is b = -P^{-T} A a, and
  //   J(n.a + m.b) = m.(-P^{-T} S a) + n.(S^{-1} P^T c) - m.(P^{-T} A S^{-1} P^T c)
  // with c = b + P^{-T} A a the M component relative to X.
  Mat J(ps.dim, ps.dim);
  Mat a_of = ps.q_map;                       // a coordinates of xi
  Mat b_of = ps.m_map;                       // b coordinates of xi
  Mat c_of = b_of + Pti * vf.A * a_of;
  J = ps.basis_m * (-Pti * vf.S) * a_of
      + ps.basis_n * (Si * P.transpose()) * c_of
      - ps.basis_m * (Pti * vf.A * Si * P.transpose()) * c_of;
  return validate_complex_structure(ps, J);
}

CVec holo_projector(const PhaseSpace& ps, const ComplexStructure& cs, const Vec& xi) {
  (void)ps;
  CVec z = xi.cast<cplx>();
  return 0.5 * (z - cplx(0, 1) * (cs.J * xi).cast<cplx>());
}

AbcdBlocks abcd_from_j(const PhaseSpace& ps, const ComplexStructure& cs) {
  Mat jn = cs.J * ps.basis_n;
  Mat jm = cs.J * ps.basis_m;
  AbcdBlocks b;
  b.A = ps.q_map * jn;
  b.D = ps.m_map * jn;
  b.B = ps.q_map * jm;
  b.C = ps.m_map * jm;
  return b;
}

VacuumForm omega_from_abcd(const PhaseSpace& ps, const AbcdBlocks& blocks) {
  check_cond(blocks.B, "B block");
  Mat P = pairing_matrix(ps);
  Mat Binv = blocks.B.inverse();
  // Omega(phi, phi') = [B^{-1} phi, phi'] - i [C B^{-1} phi, phi'] with the
  // first arguments living in M, so the bracket contributes through P.
  VacuumForm vf;
  Mat S = Binv.transpose() * P;
  Mat A = -(Binv.transpose() * blocks.C.transpose() * P);
  vf.S = 0.5 * (S + S.transpose());
  vf.A = 0.5 * (A + A.transpose());
  return vf;
}

}  // namespace geoquant
