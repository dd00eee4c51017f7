#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "geoquant/gaussian.hpp"
#include "geoquant/random_gen.hpp"
#include "geoquant/span.hpp"
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

TEST_CASE("reduced coherent evaluations on the oscillator") {
  PhaseSpace ps = e1();
  SpanSpace red = make_schrodinger_space(ps, unit_form(), true);

  Vec phi1(1), phi0(1);
  phi1 << 1.0;
  phi0 << 0.0;

  CoherentSpan vac = coherent_span(red, Vec::Zero(2));
  CHECK(std::abs(red.evaluate(vac, phi1) - cplx(1, 0)) < 1e-14);

  Vec tau12(2), tau10(2);
  tau12 << 1, 2;
  tau10 << 1, 0;
  CHECK(std::abs(red.evaluate(coherent_span(red, tau12), phi1) - cexp(cplx(0.5, 1))) <
        1e-12);
  CHECK(std::abs(red.evaluate(coherent_span(red, tau10), phi0) - cexp(cplx(-0.5, 0))) <
        1e-12);
}

TEST_CASE("inner products of coherent states") {
  PhaseSpace ps = e1();
  SpanSpace full = make_schrodinger_space(ps, unit_form(), false);
  SpanSpace red = make_schrodinger_space(ps, unit_form(), true);

  Vec q(2), p(2);
  q << 1, 0;
  p << 0, 1;

  // Full flavor: <K_tau, K_tau'> = exp(1/2 {tau', tau}).
  cplx ip = full.inner_product(coherent_span(full, q), coherent_span(full, p));
  CHECK(std::abs(ip - cexp(cplx(0, 0.5))) < 1e-12);
  CHECK(full.norm(coherent_span(full, q)) == doctest::Approx(std::exp(0.25)));

  // Reduced flavor states are the normalized ones.
  Vec tau12(2);
  tau12 << 1, 2;
  CHECK(red.norm(coherent_span(red, tau12)) == doctest::Approx(1.0).epsilon(1e-12));
  cplx ipr = red.inner_product(coherent_span(red, q), coherent_span(red, p));
  CHECK(std::abs(ipr - cexp(cplx(-0.5, 0.5))) < 1e-12);
}

TEST_CASE("polynomial prefactors in the inner product") {
  PhaseSpace ps = e1();
  SpanSpace full = make_schrodinger_space(ps, unit_form(), false);

  CoherentSpan s = coherent_span(full, Vec::Zero(2));
  s.terms[0].poly = Polynomial::variable(1, 0);
  CHECK(full.inner_product(s, s).real() == doctest::Approx(0.5).epsilon(1e-12));

  // Quadrature oracle for the same quantity.
  GaussianMeasure mu = make_gaussian(full.prec);
  auto f = [&](const Vec& phi) {
    cplx v = full.evaluate(s, phi);
    return std::conj(v) * v * std::exp(phi.dot(full.prec * phi));
  };
  CHECK(integrate(f, mu, 40).real() == doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("coherent overlap quadrature oracle") {
  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    int n = 1 + t % 2;
    PhaseSpace ps = random_phase_space(rng, 2 * n);
    VacuumForm vf = random_vacuum_form(rng, n);
    Vec tau = random_vec(rng, 2 * n, 0.7), tau2 = random_vec(rng, 2 * n, 0.7);

    // Full flavor against the scaled Lebesgue measure.
    SpanSpace full = make_schrodinger_space(ps, vf, false);
    CoherentSpan a = coherent_span(full, tau), b = coherent_span(full, tau2);
    GaussianMeasure mu = make_gaussian(full.prec);
    auto f = [&](const Vec& phi) {
      return std::conj(full.evaluate(a, phi)) * full.evaluate(b, phi) *
             std::exp(phi.dot(full.prec * phi));
    };
    cplx quad = integrate(f, mu, 40);
    // <K_tau, K_tau2> = exp(1/2 {tau2, tau}).
    cplx braces_ba = full.label_metric(tau2, tau) + cplx(0, 2) * ps.omega(tau2, tau);
    cplx expected = cexp(0.5 * braces_ba);
    CHECK(std::abs(quad - expected) < 1e-8 * (1.0 + std::abs(expected)));
    CHECK(std::abs(full.inner_product(a, b) - expected) < 1e-12 * (1.0 + std::abs(expected)));

    // Reduced flavor against the vacuum Gaussian itself.
    SpanSpace red = make_schrodinger_space(ps, vf, true);
    CoherentSpan ar = coherent_span(red, tau), br = coherent_span(red, tau2);
    auto fr = [&](const Vec& phi) {
      return std::conj(red.evaluate(ar, phi)) * red.evaluate(br, phi);
    };
    cplx quadr = integrate(fr, mu, 40);
    cplx closedr = red.inner_product(ar, br);
    CHECK(std::abs(quadr - closedr) < 1e-8 * (1.0 + std::abs(closedr)));
  }
}

TEST_CASE("gram matrices are positive definite") {
  Rng rng(37);
  PhaseSpace ps = e1();
  VacuumForm vf = unit_form();
  vf.A(0, 0) = -0.3;
  SpanSpace red = make_schrodinger_space(ps, vf, true);
  std::vector<CoherentSpan> family;
  for (int k = 0; k < 4; ++k) family.push_back(coherent_span(red, random_vec(rng, 2)));
  CMat g = gram(red, family);
  CHECK((g - g.adjoint()).norm() < 1e-12);
  Eigen::SelfAdjointEigenSolver<CMat> es(g);
  CHECK(es.eigenvalues().minCoeff() > 0.0);
}

TEST_CASE("holomorphic space evaluations and coordinates") {
  PhaseSpace ps = e1();
  ComplexStructure cs = validate_complex_structure(ps, j0());
  SpanSpace holo = make_holomorphic_space(ps, cs);

  Vec q(2), p(2);
  q << 1, 0;
  p << 0, 1;
  CHECK(std::abs(holo.evaluate(coherent_span(holo, q), q) - cexp(cplx(0.5, 0))) < 1e-12);
  cplx ip = holo.inner_product(coherent_span(holo, q), coherent_span(holo, p));
  CHECK(std::abs(ip - cexp(cplx(0, 0.5))) < 1e-12);

  // z = (a - ib)/sqrt(2) in this frame.
  CHECK(std::abs(holo.zmat(0, 0) - cplx(1 / std::sqrt(2.0), 0)) < 1e-12);
  CHECK(std::abs(holo.zmat(0, 1) - cplx(0, -1 / std::sqrt(2.0))) < 1e-12);

  // A complex linear functional lies in the z frame; its conjugate does not.
  CVec w = holo.zmat.row(0).transpose() * cplx(2.0, 1.0);
  CVec coeff = holo.holomorphic_form(w);
  CHECK(std::abs(coeff(0) - cplx(2.0, 1.0)) < 1e-10);
  CVec wbar = holo.zmat.row(0).conjugate().transpose();
  CHECK_THROWS_AS(holo.holomorphic_form(wbar), std::invalid_argument);
}

TEST_CASE("metric and section recovered from the vacuum form") {
  Rng rng(41);
  for (int t = 0; t < 10; ++t) {
    int dim = 2 * (1 + t % 3);
    PhaseSpace ps = random_phase_space(rng, dim);
    ComplexStructure cs = random_structure(rng, ps);
    VacuumForm vf = omega_from_j(ps, cs);
    CHECK((j_from_vacuum(ps, vf) - j_map(ps, cs)).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((metric_from_vacuum(ps, vf) - metric(ps, cs)).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("span combinations evaluate linearly") {
  Rng rng(43);
  PhaseSpace ps = random_phase_space(rng, 4);
  VacuumForm vf = random_vacuum_form(rng, 2);
  SpanSpace red = make_schrodinger_space(ps, vf, true);
  CoherentSpan a = random_span(rng, red, 2, 2);
  CoherentSpan b = random_span(rng, red, 1, 1);
  Vec phi = random_vec(rng, 2);
  cplx va = red.evaluate(a, phi), vb = red.evaluate(b, phi);
  CHECK(std::abs(red.evaluate(span_add(a, b), phi) - (va + vb)) < 1e-12);
  CHECK(std::abs(red.evaluate(span_scale(a, cplx(0, 2)), phi) - cplx(0, 2) * va) < 1e-12);
  CHECK(std::abs(red.evaluate(span_sub(a, b), phi) - (va - vb)) < 1e-12);
  CHECK(red.norm(span_sub(a, a)) < 1e-12);
}
