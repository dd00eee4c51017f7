#pragma once

#include "geoquant/phase_space.hpp"

namespace geoquant {

// Compatible complex structure: J^2 = -I, J^T W J = W, and 2WJ symmetric
// positive definite.
struct ComplexStructure {
  Mat J;
};

// Vacuum bilinear form on configuration space, Omega = S + iA in the basis_n
// frame; S symmetric positive definite, A symmetric.
struct VacuumForm {
  Mat S;
  Mat A;
  CMat omega() const { return S.cast<cplx>() + cplx(0, 1) * A.cast<cplx>(); }
};

// Validation helper: max relative defect over the three compatibility
// conditions.  validate_complex_structure throws when the defect exceeds tol.
double complex_structure_defect(const PhaseSpace& ps, const Mat& J);
ComplexStructure validate_complex_structure(const PhaseSpace& ps, const Mat& J,
                                            double tol = 1e-10);

// Metric g(tau, xi) = 2 omega(tau, J xi) as a matrix, G = 2WJ.
Mat metric(const PhaseSpace& ps, const ComplexStructure& cs);

// Hermitian pairing {tau, xi} = g(tau, xi) + 2i omega(tau, xi).  Conjugate
// linear in the first slot: {J tau, xi} = -i {tau, xi}, {tau, J xi} = i {tau, xi}.
cplx braces(const PhaseSpace& ps, const ComplexStructure& cs, const Vec& tau, const Vec& xi);

// Matrix of the unique linear section j: Q -> L with q(j(phi)) = phi and
// image J M.  Columns are indexed by the basis_n frame of Q.
Mat j_map(const PhaseSpace& ps, const ComplexStructure& cs);

// Vacuum form induced by a complex structure:
// Omega(phi, phi') = g(j phi, j phi') - i [j phi, phi'].
VacuumForm omega_from_j(const PhaseSpace& ps, const ComplexStructure& cs);

// Inverse correspondence.  Reconstructs J from Omega via the graph subspace
// X = { xi : Im Omega(q(xi), .) + [xi, .] = 0 on Q } and the solve
// Re Omega(q(xi), .) + [beta(xi), .] = 0 defining beta: X -> M; then
// J = beta on X and -beta^{-1} on M.  Throws if S is not symmetric positive
// definite, if A is not symmetric, or if a solve exceeds the condition guard.
ComplexStructure j_from_omega(const PhaseSpace& ps, const VacuumForm& vf);

// Holomorphic projector P+ xi = (xi - i J xi)/2.
CVec holo_projector(const PhaseSpace& ps, const ComplexStructure& cs, const Vec& xi);

// Block operators of J with respect to the splitting L = M + N, as coefficient
// matrices in the basis_m / basis_n frames:
//   J n = n.A + m.D   (A: N->N, D: N->M)
//   J m = n.B + m.C   (B: M->N, C: M->M)
struct AbcdBlocks {
  Mat A, B, C, D;
};
AbcdBlocks abcd_from_j(const PhaseSpace& ps, const ComplexStructure& cs);

// Vacuum form from the block data: Omega(phi, phi') = [B^{-1} phi, phi']
// - i [C B^{-1} phi, phi'].  Throws if B is singular.
VacuumForm omega_from_abcd(const PhaseSpace& ps, const AbcdBlocks& blocks);

}  // namespace geoquant
