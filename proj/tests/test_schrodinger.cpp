#include <doctest.h>

#include <cmath>

#include "geoquant/schrodinger.hpp"
#include "helpers.hpp"

using namespace geoquant;
using namespace geoquant::testing;

namespace {

VacuumForm unit_form() {
  VacuumForm vf;
  vf.S = Mat::Identity(1, 1);
  vf.A = Mat::Zero(1, 1);
  return vf;
}

cplx cexp(cplx z) { return std::exp(z); }

}  // namespace

TEST_CASE("vacuum wave function") {
  Vec phi0 = Vec::Zero(1), phi1 = Vec::Constant(1, 1.0);
  VacuumForm vf = unit_form();
  CHECK(std::abs(vacuum_wavefunction(vf, phi0) - cplx(1, 0)) < 1e-14);
  CHECK(std::abs(vacuum_wavefunction(vf, phi1) - cexp(cplx(-0.5, 0))) < 1e-14);

  VacuumForm vfc = unit_form();
  vfc.A(0, 0) = -1.0;  // Omega = 1 - i
  CHECK(std::abs(vacuum_wavefunction(vfc, phi1) - cexp(cplx(-0.5, 0.5))) < 1e-14);
}

TEST_CASE("coherent wave functions") {
  PhaseSpace ps = e1();
  VacuumForm vf = unit_form();
  Vec phi0 = Vec::Zero(1), phi1 = Vec::Constant(1, 1.0);

  CHECK(std::abs(coherent_wavefunction(ps, vf, Vec::Zero(2), SchrodingerKind::Reduced,
                                       phi1) -
                 cplx(1, 0)) < 1e-14);

  Vec tau10(2), tau12(2);
  tau10 << 1, 0;
  tau12 << 1, 2;
  CHECK(std::abs(coherent_wavefunction(ps, vf, tau10, SchrodingerKind::Reduced, phi0) -
                 cexp(cplx(-0.5, 0))) < 1e-13);
  CHECK(std::abs(coherent_wavefunction(ps, vf, tau12, SchrodingerKind::Reduced, phi1) -
                 cexp(cplx(0.5, 1))) < 1e-13);

  // Full = exp(g(tau,tau)/4) * reduced * vacuum.
  cplx full = coherent_wavefunction(ps, vf, tau10, SchrodingerKind::Full, phi0);
  CHECK(std::abs(full - cexp(cplx(-0.25, 0))) < 1e-13);
  cplx full12 = coherent_wavefunction(ps, vf, tau12, SchrodingerKind::Full, phi1);
  cplx red12 = coherent_wavefunction(ps, vf, tau12, SchrodingerKind::Reduced, phi1);
  double gtt = 1.0 + 2.0 * 2.0;  // g = S on q plus S^{-1}-weighted momentum part
  CHECK(std::abs(full12 - std::exp(0.25 * gtt) * red12 * vacuum_wavefunction(vf, phi1)) <
        1e-12);
}

TEST_CASE("configuration and covector parametrization") {
  PhaseSpace ps = e1();
  VacuumForm vf = unit_form();
  Vec phi1 = Vec::Constant(1, 1.0);

  Vec sigma = Vec::Constant(1, 1.0), lam0 = Vec::Zero(1), lam2 = Vec::Constant(1, 2.0);
  CHECK(std::abs(coherent_from_sigma_lambda(ps, vf, Vec::Zero(1), Vec::Zero(1), phi1) -
                 cplx(1, 0)) < 1e-14);
  CHECK(std::abs(coherent_from_sigma_lambda(ps, vf, sigma, lam0, phi1) -
                 cexp(cplx(0.5, 0))) < 1e-13);
  CHECK(std::abs(coherent_from_sigma_lambda(ps, vf, sigma, lam2, phi1) -
                 cexp(cplx(0.5, 1))) < 1e-13);

  Vec tau = label_from_sigma_lambda(ps, sigma, lam2);
  CHECK(tau(0) == doctest::Approx(1.0));
  CHECK(tau(1) == doctest::Approx(2.0));
  CHECK(std::abs(coherent_from_sigma_lambda(ps, vf, sigma, lam2, phi1) -
                 coherent_wavefunction(ps, vf, tau, SchrodingerKind::Reduced, phi1)) <
        1e-13);
}

TEST_CASE("projection residuals decrease along the coherent grid") {
  PhaseSpace ps = e1();
  SpanSpace red = make_schrodinger_space(ps, unit_form(), true);

  // Degree-one target phi * k_0.
  CoherentSpan target = coherent_span(red, Vec::Zero(2));
  target.terms[0].poly = Polynomial::variable(1, 0);

  DensityProbeResult res = density_probe(red, target, 8);
  REQUIRE(res.residuals.size() == 9);
  CHECK(res.residuals[0] == doctest::Approx(red.norm(target)));
  for (int k = 1; k <= 8; ++k) {
    CHECK(res.residuals[k] < res.residuals[k - 1] + 1e-12);
  }
  CHECK(res.residuals[8] < res.residuals[1]);

  // A target inside the grid projects to residual zero at its index.
  std::vector<Vec> grid = density_grid(ps, 4);
  CoherentSpan member = coherent_span(red, grid[2]);
  DensityProbeResult hit = density_probe(red, member, 4);
  CHECK(hit.residuals[3] < 1e-7);
  CHECK(hit.residuals[4] < 1e-7);
}
