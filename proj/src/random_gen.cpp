#include "geoquant/random_gen.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <stdexcept>

namespace geoquant {

namespace {

Mat random_matrix(Rng& rng, int rows, int cols, double scale) {
  std::normal_distribution<double> dist(0.0, scale);
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

Mat random_orthogonal(Rng& rng, int size) {
  Eigen::HouseholderQR<Mat> qr(random_matrix(rng, size, size, 1.0));
  Mat q = qr.householderQ();
  return q;
}

}  // namespace

Vec random_vec(Rng& rng, int size, double scale) {
  std::normal_distribution<double> dist(0.0, scale);
  Vec v(size);
  for (int i = 0; i < size; ++i) v(i) = dist(rng);
  return v;
}

Mat random_symplectic(Rng& rng, const Mat& W, double scale) {
  const int d = static_cast<int>(W.rows());
  Mat sym = random_matrix(rng, d, d, scale);
  sym = 0.5 * (sym + sym.transpose()).eval();
  Mat gen = W.fullPivLu().solve(sym);
  return gen.exp();
}

ComplexStructure standard_structure(const PhaseSpace& ps) {
  Eigen::SelfAdjointEigenSolver<Mat> es(ps.W.transpose() * ps.W);
  return validate_complex_structure(ps, -ps.W * es.operatorInverseSqrt());
}

ComplexStructure random_structure(Rng& rng, const PhaseSpace& ps, double scale) {
  Mat R = random_symplectic(rng, ps.W, scale);
  Mat J0 = standard_structure(ps).J;
  return validate_complex_structure(ps, R * J0 * R.inverse());
}

PhaseSpace random_phase_space(Rng& rng, int dim) {
  if (dim < 2 || dim % 2 != 0) throw std::invalid_argument("random: dimension must be even");
  const int n = dim / 2;
  Mat T0 = Mat::Zero(dim, dim);
  T0.bottomLeftCorner(n, n) = Mat::Identity(n, n);
  std::uniform_real_distribution<double> ddist(0.7, 1.4);
  Vec d(dim);
  for (int i = 0; i < dim; ++i) d(i) = ddist(rng);
  Mat C = random_orthogonal(rng, dim) * d.asDiagonal() * random_orthogonal(rng, dim);
  Mat T = C.transpose() * T0 * C;
  return build_phase_space(T);
}

VacuumForm random_vacuum_form(Rng& rng, int n, double spread) {
  std::uniform_real_distribution<double> ddist(0.6, 1.8);
  Vec d(n);
  for (int i = 0; i < n; ++i) d(i) = ddist(rng);
  Mat Q = random_orthogonal(rng, n);
  VacuumForm vf;
  vf.S = Q * d.asDiagonal() * Q.transpose();
  Mat A = random_matrix(rng, n, n, spread);
  vf.A = 0.5 * (A + A.transpose());
  return vf;
}

Polynomial random_polynomial(Rng& rng, int nvars, int degree, int nterms) {
  std::uniform_int_distribution<int> ddist(0, degree);
  std::uniform_int_distribution<int> vdist(0, nvars - 1);
  std::normal_distribution<double> cdist(0.0, 1.0);
  Polynomial p(nvars);
  for (int t = 0; t < nterms; ++t) {
    MultiIndex mi(nvars, 0);
    int total = ddist(rng);
    for (int j = 0; j < total; ++j) mi[vdist(rng)] += 1;
    p.add_term(mi, cplx(cdist(rng), cdist(rng)));
  }
  return p;
}

CoherentSpan random_span(Rng& rng, const SpanSpace& space, int nstates, int degree) {
  std::normal_distribution<double> cdist(0.0, 1.0);
  CoherentSpan s;
  s.rep = space.rep;
  for (int i = 0; i < nstates; ++i) {
    Vec label = random_vec(rng, space.ps.dim, 0.8);
    cplx coeff(cdist(rng), cdist(rng));
    Polynomial poly = degree > 0 ? random_polynomial(rng, space.pvars, degree, 2)
                                 : Polynomial::constant(space.pvars, 1.0);
    if (poly.is_zero()) poly = Polynomial::constant(space.pvars, 1.0);
    s.terms.push_back({coeff, label, poly});
  }
  return s;
}

}  // namespace geoquant
