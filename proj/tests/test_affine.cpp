#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "geoquant/affine.hpp"
#include "geoquant/holomorphic.hpp"
#include "geoquant/random_gen.hpp"
#include "geoquant/schrodinger.hpp"
#include "helpers.hpp"

using namespace geoquant;
using namespace geoquant::testing;

namespace {
cplx cexp(cplx z) { return std::exp(z); }

VacuumForm unit_form() {
  VacuumForm vf;
  vf.S = Mat::Identity(1, 1);
  vf.A = Mat::Zero(1, 1);
  return vf;
}

AffineContext e1_context() {
  PhaseSpace ps = e1();
  AffineSpace aff = make_affine_space(ps, Vec::Zero(2));
  return make_affine_context(aff, validate_complex_structure(ps, j0()));
}
}  // namespace

TEST_CASE("cocycle values") {
  PhaseSpace ps = e1();
  AffineSpace aff = make_affine_space(ps, Vec::Zero(2));
  Vec eta(2), tau(2);
  eta << 0, 1;
  tau << 1, 0;
  CHECK(theta(aff, eta, tau) == doctest::Approx(1.0));

  Rng rng(3);
  Vec t0 = random_vec(rng, 2);
  AffineSpace tw = make_affine_space(ps, t0);
  for (int k = 0; k < 10; ++k) {
    Vec a = random_vec(rng, 2), b = random_vec(rng, 2);
    CHECK(theta(tw, a, b) == doctest::Approx(t0.dot(b) + ps.bracket(a, b)));
  }
}

TEST_CASE("displaced vacua peak at their own label") {
  Rng rng(7);
  PhaseSpace ps = e1();
  Vec t0 = random_vec(rng, 2);
  AffineSpace aff = make_affine_space(ps, t0);
  ComplexStructure cs = random_structure(rng, ps);
  Mat G = metric(ps, cs);
  for (int k = 0; k < 10; ++k) {
    Vec eta = random_vec(rng, 2), zeta = random_vec(rng, 2);
    CHECK(std::abs(affine_coherent_h(aff, G, eta, eta) - cplx(1, 0)) < 1e-13);
    Vec d = zeta - eta;
    double expected = std::exp(-0.5 * d.dot(G * d));
    CHECK(std::abs(std::norm(affine_coherent_h(aff, G, eta, zeta)) - expected) <
          1e-12 * (1.0 + expected));
  }
}

TEST_CASE("configuration-side affine coherent states") {
  PhaseSpace ps = e1();
  AffineSpace aff = make_affine_space(ps, Vec::Zero(2));
  VacuumForm vf = unit_form();

  CHECK(std::abs(affine_coherent_s(aff, vf, Vec::Zero(2), Vec::Constant(1, 1.0)) -
                 cexp(cplx(-0.5, 0))) < 1e-13);

  // Modulus depends only on the configuration offset from the label image.
  Rng rng(11);
  Vec t0 = random_vec(rng, 2);
  AffineSpace tw = make_affine_space(ps, t0);
  for (int k = 0; k < 10; ++k) {
    Vec z1 = random_vec(rng, 2), z2 = random_vec(rng, 2), u = random_vec(rng, 1);
    Vec p1 = u + ps.quotient(z1), p2 = u + ps.quotient(z2);
    double m1 = std::abs(affine_coherent_s(tw, vf, z1, p1));
    double m2 = std::abs(affine_coherent_s(tw, vf, z2, p2));
    CHECK(m1 == doctest::Approx(m2).epsilon(1e-10));
    CHECK(m1 == doctest::Approx(std::exp(-0.5 * u.dot(vf.S * u))).epsilon(1e-10));
  }
}

TEST_CASE("base change multiplier") {
  PhaseSpace ps = e1();
  AffineSpace aff = make_affine_space(ps, Vec::Zero(2));
  VacuumForm vf = unit_form();
  Vec delta(2);
  delta << 1, 0;
  CHECK(std::abs(base_change_factor(aff, vf, Vec::Zero(2), delta, Vec::Zero(1)) -
                 cexp(cplx(-0.5, 0))) < 1e-13);
  Rng rng(13);
  for (int k = 0; k < 5; ++k) {
    Vec eta = random_vec(rng, 2), phi = random_vec(rng, 1);
    CHECK(std::abs(base_change_factor(aff, vf, eta, eta, phi) - cplx(1, 0)) < 1e-13);
  }
}

TEST_CASE("configuration spaces reject cocycle vectors with fiber components") {
  PhaseSpace ps = e1();
  Vec bad(2), good(2);
  bad << 0, 1;
  good << 1, 0;
  VacuumForm vf = unit_form();
  AffineSpace twisted = make_affine_space(ps, bad);
  CHECK_THROWS_AS(make_affine_schrodinger_space(twisted, vf, true, Vec::Zero(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_affine_context(twisted, validate_complex_structure(ps, j0())),
                  std::invalid_argument);
  AffineSpace adapted = make_affine_space(ps, good);
  CHECK_NOTHROW(make_affine_schrodinger_space(adapted, vf, true, Vec::Zero(2)));
}

TEST_CASE("rebasing composes and preserves norms") {
  Rng rng(17);
  PhaseSpace ps = random_phase_space(rng, 4);
  AffineSpace aff = make_affine_space(ps, ps.T.transpose() * random_vec(rng, 4));
  VacuumForm vf = random_vacuum_form(rng, 2);
  Vec b1 = random_vec(rng, 4), b2 = random_vec(rng, 4), b3 = random_vec(rng, 4);
  SpanSpace s1 = make_affine_schrodinger_space(aff, vf, true, b1);
  SpanSpace s2 = make_affine_schrodinger_space(aff, vf, true, b2);
  SpanSpace s3 = make_affine_schrodinger_space(aff, vf, true, b3);

  CoherentSpan s = random_span(rng, s1, 2, 2);
  CoherentSpan r12 = rebase_state(s1, s, b2);
  CoherentSpan r123 = rebase_state(s2, r12, b3);
  CoherentSpan r13 = rebase_state(s1, s, b3);
  CHECK(s3.norm(span_sub(r123, r13)) < 1e-12 * (1.0 + s3.norm(r13)));
  CHECK(s2.norm(r12) == doctest::Approx(s1.norm(s)).epsilon(1e-10));
}

TEST_CASE("span engine matches the direct evaluators") {
  Rng rng(19);
  PhaseSpace ps = e1();
  AffineSpace aff = make_affine_space(ps, ps.T.transpose() * random_vec(rng, 2));
  ComplexStructure cs = random_structure(rng, ps);
  AffineContext ctx = make_affine_context(aff, cs);
  for (int k = 0; k < 10; ++k) {
    Vec eta = random_vec(rng, 2), zeta = random_vec(rng, 2), phi = random_vec(rng, 1);
    cplx h = ctx.holo.evaluate(coherent_span(ctx.holo, eta), zeta);
    CHECK(std::abs(h - affine_coherent_h(aff, ctx.holo.G, eta, zeta)) < 1e-12);
    cplx s = ctx.full.evaluate(coherent_span(ctx.full, zeta), phi);
    CHECK(std::abs(s - affine_coherent_s(aff, ctx.vf, zeta, phi)) < 1e-12);
  }
}

TEST_CASE("reduced and full descriptions are interchangeable") {
  Rng rng(23);
  PhaseSpace ps = random_phase_space(rng, 4);
  AffineSpace aff = make_affine_space(ps, ps.T.transpose() * random_vec(rng, 4));
  ComplexStructure cs = random_structure(rng, ps);
  AffineContext ctx = make_affine_context(aff, cs);
  Vec base = random_vec(rng, 4);
  SpanSpace red = make_affine_schrodinger_space(aff, ctx.vf, true, base);

  CoherentSpan s = random_span(rng, red, 2, 2);
  CoherentSpan full = affine_reduced_to_full(red, s);
  CHECK(ctx.full.norm(full) == doctest::Approx(red.norm(s)).epsilon(1e-10));
  CoherentSpan back = affine_full_to_reduced(ctx, full, base);
  CHECK(red.norm(span_sub(back, s)) < 1e-12 * (1.0 + red.norm(s)));
}

TEST_CASE("affine transform is label preserving and isometric") {
  AffineContext ctx = e1_context();
  CoherentSpan anchor = coherent_span(ctx.full, Vec::Zero(2));
  CoherentSpan h = transform_affine(ctx, anchor);
  CHECK(h.terms.size() == 1);
  CHECK(h.terms[0].label.norm() < 1e-12);
  CHECK(std::abs(h.terms[0].coeff - cplx(1, 0)) < 1e-12);

  Rng rng(29);
  for (int t = 0; t < 6; ++t) {
    int d = 2 * (1 + t % 2);
    PhaseSpace ps = random_phase_space(rng, d);
    AffineSpace aff = make_affine_space(ps, ps.T.transpose() * random_vec(rng, d));
    AffineContext c = make_affine_context(aff, random_structure(rng, ps));
    CoherentSpan a = random_span(rng, c.full, 2, 2), b = random_span(rng, c.full, 2, 1);
    cplx sab = c.full.inner_product(a, b);
    cplx hab = c.holo.inner_product(transform_affine(c, a), transform_affine(c, b));
    CHECK(std::abs(hab - sab) < 1e-12 * (1.0 + std::abs(sab)));
    CoherentSpan round = transform_affine_inverse(c, transform_affine(c, a));
    CHECK(c.full.norm(span_sub(round, a)) < 1e-10 * (1.0 + c.full.norm(a)));
  }
}

TEST_CASE("affine integral transforms agree with the closed forms") {
  Rng rng(31);
  PhaseSpace ps = e1();
  AffineSpace aff = make_affine_space(ps, ps.T.transpose() * random_vec(rng, 2));
  AffineContext ctx = make_affine_context(aff, random_structure(rng, ps));

  CoherentSpan s = random_span(rng, ctx.full, 2, 1);
  CoherentSpan hs = transform_affine(ctx, s);
  auto sf = [&](const Vec& phi) { return ctx.full.evaluate(s, phi); };
  auto hf = [&](const Vec& zeta) { return ctx.holo.evaluate(hs, zeta); };
  for (int k = 0; k < 3; ++k) {
    Vec zeta = random_vec(rng, 2, 0.7), phi = random_vec(rng, 1, 0.7);
    cplx closed = ctx.holo.evaluate(hs, zeta);
    CHECK(std::abs(transform_affine_quadrature(ctx, sf, zeta, 40) - closed) <
          1e-6 * (1.0 + std::abs(closed)));
    cplx closed2 = ctx.full.evaluate(s, phi);
    CHECK(std::abs(transform_affine_inverse_quadrature(ctx, hf, phi, 40) - closed2) <
          1e-6 * (1.0 + std::abs(closed2)));
  }

  CoherentSpan h = random_span(rng, ctx.holo, 2, 1);
  auto hpsi = [&](const Vec& zeta) { return ctx.holo.evaluate(h, zeta); };
  cplx pc = pairing_affine_closed(ctx, h, s);
  CHECK(std::abs(pairing_affine_quadrature(ctx, hpsi, sf, 40) - pc) <
        1e-6 * (1.0 + std::abs(pc)));
}

TEST_CASE("quantized affine observables act by multiplier plus derivative") {
  Rng rng(37);
  double h = 1e-5;
  for (int t = 0; t < 4; ++t) {
    int d = 2 * (1 + t % 2);
    PhaseSpace ps = t == 0 ? e1() : random_phase_space(rng, d);
    AffineSpace aff = make_affine_space(ps, ps.T.transpose() * random_vec(rng, ps.dim));
    AffineContext ctx = make_affine_context(aff, random_structure(rng, ps));
    AffineObservable F = make_affine_observable(ps, 0.7, random_vec(rng, ps.dim));

    CoherentSpan sh = random_span(rng, ctx.holo, 2, 1);
    CoherentSpan Fh = apply_affine_observable(ctx.holo, F, sh);
    for (int k = 0; k < 4; ++k) {
      Vec zeta = random_vec(rng, ps.dim);
      cplx mult = F.constant + F.f.dot(zeta) - theta(aff, zeta, F.X);
      cplx deriv = (ctx.holo.evaluate(sh, zeta + h * F.X) -
                    ctx.holo.evaluate(sh, zeta - h * F.X)) / (2.0 * h);
      cplx expected = mult * ctx.holo.evaluate(sh, zeta) - cplx(0, 1) * deriv;
      CHECK(std::abs(ctx.holo.evaluate(Fh, zeta) - expected) <
            1e-6 * (1.0 + std::abs(expected)));
    }

    CoherentSpan ss = random_span(rng, ctx.full, 2, 1);
    CoherentSpan Fs = apply_affine_observable(ctx.full, F, ss);
    Vec qX = ps.q_map * F.X;
    for (int k = 0; k < 4; ++k) {
      Vec phi = random_vec(rng, ps.n());
      cplx mult = F.constant - aff.theta0.dot(ps.lift(qX)) -
                  ps.bracket(F.X, ps.basis_n * phi);
      cplx deriv = (ctx.full.evaluate(ss, phi + h * qX) -
                    ctx.full.evaluate(ss, phi - h * qX)) / (2.0 * h);
      cplx expected = mult * ctx.full.evaluate(ss, phi) - cplx(0, 1) * deriv;
      CHECK(std::abs(ctx.full.evaluate(Fs, phi) - expected) <
            1e-6 * (1.0 + std::abs(expected)));
    }

    // The action commutes with the transform.
    CoherentSpan lhs = transform_affine(ctx, Fs);
    CoherentSpan rhs = apply_affine_observable(ctx.holo, F, transform_affine(ctx, ss));
    double ref = ctx.holo.norm(transform_affine(ctx, ss));
    CHECK(ctx.holo.norm(span_sub(lhs, rhs)) < 1e-9 * (1.0 + ref));
  }
}

TEST_CASE("untwisted affine spaces reduce to the linear theory") {
  PhaseSpace ps = e1();
  ComplexStructure cs = validate_complex_structure(ps, j0());
  AffineSpace aff = make_affine_space(ps, Vec::Zero(2));
  AffineContext ctx = make_affine_context(aff, cs);
  VacuumForm vf = omega_from_j(ps, cs);

  Rng rng(41);
  for (int k = 0; k < 10; ++k) {
    Vec phi = random_vec(rng, 1);
    cplx lhs = affine_coherent_s(aff, vf, Vec::Zero(2), phi);
    CHECK(std::abs(lhs - vacuum_wavefunction(vf, phi)) < 1e-13);

    Vec eta = random_vec(rng, 2), zeta = random_vec(rng, 2);
    cplx expect = cexp(cplx(0, -0.5) * ps.bracket(eta, eta)) *
                  coherent_h(ps, cs, eta, HolomorphicKind::Normalized, zeta) *
                  alpha_fn(ps, cs, zeta);
    CHECK(std::abs(affine_coherent_h(aff, ctx.holo.G, eta, zeta) - expect) <
          1e-12 * (1.0 + std::abs(expect)));
  }
}
