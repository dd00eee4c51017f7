#include "geoquant/schrodinger.hpp"

#include <cmath>
#include <stdexcept>

namespace geoquant {

cplx vacuum_wavefunction(const VacuumForm& vf, const Vec& phi) {
  CVec p = phi.cast<cplx>();
  return std::exp(-0.5 * cplx(p.transpose() * vf.omega() * p));
}

cplx coherent_wavefunction(const PhaseSpace& ps, const VacuumForm& vf, const Vec& tau,
                           SchrodingerKind kind, const Vec& phi) {
  SpanSpace space =
      make_schrodinger_space(ps, vf, kind == SchrodingerKind::Reduced);
  return space.evaluate(coherent_span(space, tau), phi);
}

Vec label_from_sigma_lambda(const PhaseSpace& ps, const Vec& sigma, const Vec& lambda) {
  if (sigma.size() != ps.n() || lambda.size() != ps.n())
    throw std::invalid_argument("schrodinger: sigma/lambda size mismatch");
  Mat P = ps.basis_m.transpose() * ps.T * ps.basis_n;
  return ps.basis_n * sigma + ps.basis_m * P.transpose().inverse() * lambda;
}

cplx coherent_from_sigma_lambda(const PhaseSpace& ps, const VacuumForm& vf, const Vec& sigma,
                                const Vec& lambda, const Vec& phi) {
  return coherent_wavefunction(ps, vf, label_from_sigma_lambda(ps, sigma, lambda),
                               SchrodingerKind::Reduced, phi);
}

std::vector<Vec> density_grid(const PhaseSpace& ps, int count) {
  std::vector<Vec> grid;
  grid.reserve(count);
  for (int i = 0; i < count; ++i) {
    Vec tau(ps.dim);
    for (int d = 0; d < ps.dim; ++d)
      tau(d) = 0.7 * std::cos(1.7 * (i + 1) * (d + 1) + 0.3 * (d + 1));
    grid.push_back(tau);
  }
  return grid;
}

DensityProbeResult density_probe(const SpanSpace& space, const CoherentSpan& target, int k) {
  if (k < 0) throw std::invalid_argument("density probe: negative count");
  std::vector<Vec> grid = density_grid(space.ps, k);
  std::vector<CoherentSpan> states;
  states.reserve(k);
  for (const Vec& tau : grid) states.push_back(coherent_span(space, tau));

  DensityProbeResult result;
  double target2 = space.inner_product(target, target).real();
  result.residuals.push_back(std::sqrt(std::max(target2, 0.0)));

  CMat G = gram(space, states);
  CVec rhs(k);
  for (int i = 0; i < k; ++i) rhs(i) = space.inner_product(states[i], target);

  for (int j = 1; j <= k; ++j) {
    CMat Gj = G.topLeftCorner(j, j);
    Eigen::JacobiSVD<CMat> svd(Gj);
    double cmax = svd.singularValues()(0);
    double cmin = svd.singularValues()(j - 1);
    if (cmin <= 0.0 || cmax / cmin > kCondGuard) {
      Gj += 1e-10 * CMat::Identity(j, j);
      result.regularized = true;
    }
    CVec c = Gj.ldlt().solve(rhs.head(j));
    double proj = rhs.head(j).dot(c).real();
    result.residuals.push_back(std::sqrt(std::max(target2 - proj, 0.0)));
  }
  return result;
}

}  // namespace geoquant
