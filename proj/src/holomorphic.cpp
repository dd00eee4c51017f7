#include "geoquant/holomorphic.hpp"

#include <cmath>
#include <stdexcept>

namespace geoquant {

cplx coherent_h(const PhaseSpace& ps, const ComplexStructure& cs, const Vec& tau,
                HolomorphicKind kind, const Vec& xi) {
  cplx value = std::exp(0.5 * braces(ps, cs, tau, xi));
  if (kind == HolomorphicKind::Normalized) {
    Mat G = metric(ps, cs);
    value *= std::exp(-0.25 * tau.dot(G * tau));
  }
  return value;
}

cplx reproduce(const SpanSpace& space, const CoherentSpan& psi, const Vec& tau, double tol) {
  cplx paired = space.inner_product(coherent_span(space, tau), psi);
  cplx pointwise = space.evaluate(psi, tau);
  double scale = 1.0 + std::abs(pointwise);
  if (std::abs(paired - pointwise) > tol * scale)
    throw std::runtime_error("holomorphic: reproducing property violated");
  return paired;
}

cplx alpha_fn(const PhaseSpace& ps, const ComplexStructure& cs, const Vec& xi) {
  Mat G = metric(ps, cs);
  return std::exp(cplx(0, 0.5) * ps.bracket(xi, xi) - 0.25 * xi.dot(G * xi));
}

double kahler_potential(const PhaseSpace& ps, const ComplexStructure& cs, const Vec& xi) {
  Mat G = metric(ps, cs);
  return 0.5 * xi.dot(G * xi);
}

cplx theta_adapted(const PhaseSpace& ps, const ComplexStructure& cs, const Vec& tau,
                   const Vec& xi) {
  return -cplx(0, 0.5) * braces(ps, cs, tau, xi);
}

}  // namespace geoquant
