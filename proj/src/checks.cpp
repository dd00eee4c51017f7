#include "geoquant/checks.hpp"

#include <chrono>
#include <cmath>

#include "geoquant/affine.hpp"
#include "geoquant/bargmann.hpp"
#include "geoquant/holomorphic.hpp"
#include "geoquant/lattice.hpp"
#include "geoquant/observables.hpp"
#include "geoquant/random_gen.hpp"
#include "geoquant/schrodinger.hpp"

namespace geoquant {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

double entry_max(const Mat& a) { return a.cwiseAbs().maxCoeff(); }

CheckReport finish(const std::string& name, double max_error, double tol,
                   Clock::time_point start, bool extra_ok = true) {
  CheckReport r;
  r.check = name;
  r.max_error = max_error;
  r.tolerance = tol;
  r.passed = extra_ok && max_error <= tol;
  r.runtime_ms = ms_since(start);
  return r;
}

Mat e1_bracket() {
  Mat T = Mat::Zero(2, 2);
  T(1, 0) = 1.0;
  return T;
}

}  // namespace

CheckReport check_roundtrip(std::uint64_t seed, int trials, int dim) {
  auto start = Clock::now();
  Rng rng(seed);
  double err = 0.0;
  for (int t = 0; t < trials; ++t) {
    int d = dim > 0 ? dim : 2 * (1 + t % 8);
    PhaseSpace ps = random_phase_space(rng, d);
    ComplexStructure cs = random_structure(rng, ps);
    VacuumForm vf = omega_from_j(ps, cs);
    ComplexStructure back = j_from_omega(ps, vf);
    err = std::max(err, entry_max(back.J - cs.J));

    VacuumForm vf0 = random_vacuum_form(rng, d / 2);
    ComplexStructure via = j_from_omega(ps, vf0);
    VacuumForm vf1 = omega_from_j(ps, via);
    err = std::max(err, std::max(entry_max(vf1.S - vf0.S), entry_max(vf1.A - vf0.A)));
  }
  return finish("structure_form_roundtrip", err, 1e-9, start);
}

CheckReport check_structure_invariants(std::uint64_t seed, int trials) {
  auto start = Clock::now();
  Rng rng(seed);
  double err = 0.0;
  bool positive = true;
  for (int t = 0; t < trials; ++t) {
    int d = 2 * (1 + t % 8);
    PhaseSpace ps = random_phase_space(rng, d);
    VacuumForm vf = random_vacuum_form(rng, d / 2);
    ComplexStructure cs = j_from_omega(ps, vf);
    err = std::max(err, entry_max(cs.J * cs.J + Mat::Identity(d, d)));
    err = std::max(err, entry_max(cs.J.transpose() * ps.W * cs.J - ps.W));
    Mat G = metric(ps, cs);
    err = std::max(err, entry_max(G - G.transpose()));
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (G + G.transpose()));
    positive = positive && es.eigenvalues().minCoeff() > 0.0;
  }
  return finish("structure_invariants", err, 1e-10, start, positive);
}

CheckReport check_isometry(std::uint64_t seed) {
  auto start = Clock::now();
  Rng rng(seed);

  double closed_err = 0.0;
  for (int t = 0; t < 50; ++t) {
    int d = 2 * (1 + t % 4);
    PhaseSpace ps = random_phase_space(rng, d);
    BargmannContext ctx = make_bargmann(ps, random_structure(rng, ps));
    const SpanSpace& sch = t % 2 == 0 ? ctx.full : ctx.reduced;
    CoherentSpan a = random_span(rng, sch, 2, 2);
    CoherentSpan b = random_span(rng, sch, 2, 1);
    cplx sab = sch.inner_product(a, b);
    cplx hab = ctx.holo.inner_product(transform(ctx, a), transform(ctx, b));
    closed_err = std::max(closed_err, std::abs(hab - sab) / (1.0 + std::abs(sab)));
  }
  CheckReport closed = finish("bargmann_isometry_closed", closed_err, 1e-12, start);

  auto qstart = Clock::now();
  double quad_err = 0.0;
  for (int n = 1; n <= 2; ++n) {
    PhaseSpace ps = random_phase_space(rng, 2 * n);
    BargmannContext ctx = make_bargmann(ps, random_structure(rng, ps));
    CoherentSpan s = random_span(rng, ctx.full, 1, 1);
    CoherentSpan h = transform(ctx, s);
    auto spsi = [&](const Vec& phi) { return ctx.full.evaluate(s, phi); };
    auto hpsi = [&](const Vec& xi) { return ctx.holo.evaluate(h, xi); };
    for (int k = 0; k < 2; ++k) {
      Vec xi = random_vec(rng, 2 * n, 0.6);
      cplx closed_v = ctx.holo.evaluate(h, xi);
      cplx quad_v = transform_quadrature(ctx, spsi, xi, 40);
      quad_err = std::max(quad_err, std::abs(quad_v - closed_v) / (1.0 + std::abs(closed_v)));

      Vec phi = random_vec(rng, n, 0.6);
      cplx closed_b = ctx.full.evaluate(s, phi);
      cplx quad_b = transform_inverse_quadrature(ctx, hpsi, phi, n == 1 ? 40 : 24);
      quad_err = std::max(quad_err, std::abs(quad_b - closed_b) / (1.0 + std::abs(closed_b)));
    }
  }
  CheckReport quad = finish("bargmann_isometry_quadrature", quad_err, 1e-6, qstart);

  return combine_reports("bargmann_isometry", {closed, quad});
}

CheckReport check_coordinate_kernel(std::uint64_t seed) {
  auto start = Clock::now();
  Rng rng(seed);
  PhaseSpace ps = build_phase_space(e1_bracket());
  BargmannContext ctx = make_bargmann(ps, standard_structure(ps));
  double err = 0.0;
  for (int t = 0; t < 100; ++t) {
    Vec xi = random_vec(rng, 2, 1.0);
    Vec phi = random_vec(rng, 1, 1.0);
    cplx lhs = kernel(ctx, xi, phi);
    cplx rhs = coordinate_kernel(1, z_coords(ctx, xi), q_coords(ctx, phi));
    err = std::max(err, std::abs(lhs - rhs));
  }
  return finish("coordinate_kernel", err, 1e-12, start);
}

CheckReport check_reproducing(std::uint64_t seed) {
  auto start = Clock::now();
  Rng rng(seed);
  double err = 0.0;
  for (int t = 0; t < 50; ++t) {
    int d = 2 * (1 + t % 3);
    PhaseSpace ps = random_phase_space(rng, d);
    ComplexStructure cs = random_structure(rng, ps);
    SpanSpace holo = make_holomorphic_space(ps, cs);
    CoherentSpan psi = random_span(rng, holo, 2, 2);
    Vec tau = random_vec(rng, d, 0.7);
    cplx ip = holo.inner_product(coherent_span(holo, tau), psi);
    cplx pw = holo.evaluate(psi, tau);
    err = std::max(err, std::abs(ip - pw) / (1.0 + std::abs(pw)));

    double g = holo.label_metric(tau, tau);
    CoherentSpan ktil = coherent_span(holo, tau, std::exp(-0.25 * g));
    err = std::max(err, std::abs(holo.norm(ktil) - 1.0));

    SpanSpace reduced = make_schrodinger_space(ps, omega_from_j(ps, cs), true);
    err = std::max(err, std::abs(reduced.norm(coherent_span(reduced, tau)) - 1.0));
  }
  return finish("reproducing_property", err, 1e-10, start);
}

CheckReport check_pairing(std::uint64_t seed) {
  auto start = Clock::now();
  Rng rng(seed);
  double err = 0.0;
  for (int n = 1; n <= 2; ++n) {
    PhaseSpace ps = random_phase_space(rng, 2 * n);
    BargmannContext ctx = make_bargmann(ps, random_structure(rng, ps));
    CoherentSpan h = random_span(rng, ctx.holo, 1, 1);
    CoherentSpan s = random_span(rng, ctx.full, 1, 1);
    auto hpsi = [&](const Vec& xi) { return ctx.holo.evaluate(h, xi); };
    auto spsi = [&](const Vec& phi) { return ctx.full.evaluate(s, phi); };
    int order = default_quadrature_order(2 * n);
    cplx closed = pairing_closed(ctx, h, s);
    cplx quad = pairing_quadrature(ctx, hpsi, spsi, order);
    err = std::max(err, std::abs(quad - closed) / (1.0 + std::abs(closed)));
    cplx closed_inv =
        ctx.full.inner_product(s, transform_inverse(ctx, h, Rep::SchrodingerFull));
    cplx quad_inv = pairing_inverse_quadrature(ctx, spsi, hpsi, order);
    err = std::max(err, std::abs(quad_inv - closed_inv) / (1.0 + std::abs(closed_inv)));
  }
  return finish("bargmann_pairing", err, 1e-6, start);
}

CheckReport check_ccr(std::uint64_t seed) {
  auto start = Clock::now();
  Rng rng(seed);
  double err = 0.0;

  PhaseSpace e1 = build_phase_space(e1_bracket());
  BargmannContext e1ctx = make_bargmann(e1, standard_structure(e1));
  LinearObservable qhat = make_observable(e1, Vec::Unit(2, 0));
  LinearObservable phat = make_observable(e1, Vec::Unit(2, 1));
  for (const SpanSpace* space : {&e1ctx.full, &e1ctx.reduced, &e1ctx.holo}) {
    CoherentSpan s = random_span(rng, *space, 2, 1);
    CommutatorDefect cd = commutator_defect(*space, qhat, phat, s);
    err = std::max(err, std::abs(cd.constant - cplx(0, 1)));
    err = std::max(err, cd.defect);
  }

  for (int t = 0; t < 12; ++t) {
    int d = 2 * (1 + t % 3);
    PhaseSpace ps = random_phase_space(rng, d);
    BargmannContext ctx = make_bargmann(ps, random_structure(rng, ps));
    LinearObservable F = make_observable(ps, random_vec(rng, d, 0.8));
    LinearObservable G = make_observable(ps, random_vec(rng, d, 0.8));
    cplx expect = expected_commutator(ps, F, G);
    for (const SpanSpace* space : {&ctx.full, &ctx.reduced, &ctx.holo}) {
      CoherentSpan s = random_span(rng, *space, 2, 1);
      CommutatorDefect cd = commutator_defect(*space, F, G, s);
      err = std::max(err, std::abs(cd.constant - expect));
      err = std::max(err, cd.defect);
    }
  }
  return finish("canonical_commutators", err, 1e-10, start);
}

CheckReport check_intertwine(std::uint64_t seed, int trials) {
  auto start = Clock::now();
  Rng rng(seed);
  double err = 0.0;
  for (int t = 0; t < trials; ++t) {
    int d = 2 * (1 + t % 3);
    PhaseSpace ps = random_phase_space(rng, d);
    BargmannContext ctx = make_bargmann(ps, random_structure(rng, ps));
    LinearObservable F = make_observable(ps, random_vec(rng, d, 0.8));
    const SpanSpace& sch = t % 2 == 0 ? ctx.full : ctx.reduced;
    CoherentSpan s = random_span(rng, sch, 2, 2);
    err = std::max(err, intertwine_defect(ctx, F, s));
  }
  return finish("observable_intertwining", err, 1e-9, start);
}

CheckReport check_exp_creation(std::uint64_t seed) {
  auto start = Clock::now();
  Rng rng(seed);
  double err = 0.0;
  for (int t = 0; t < 10; ++t) {
    int d = 2 * (1 + t % 2);
    PhaseSpace ps = random_phase_space(rng, d);
    ComplexStructure cs = random_structure(rng, ps);
    SpanSpace holo = make_holomorphic_space(ps, cs);
    // Keep the label inside the radius where the truncated exponential stays
    // below the fidelity tolerance in double precision.
    Vec f = random_vec(rng, d, 0.5);
    Vec tau0 = -(cs.J * make_observable(ps, f).X);
    double glen = tau0.dot(metric(ps, cs) * tau0);
    LinearObservable F = make_observable(ps, f * (0.8 / std::sqrt(std::max(1.0, glen))));
    CreationResult res = exp_creation_on_vacuum(holo, cs, F);
    CoherentSpan target = coherent_span(holo, res.label);
    double num = std::abs(holo.inner_product(target, res.series));
    double den = holo.norm(target) * holo.norm(res.series);
    err = std::max(err, 1.0 - num / den);
  }
  return finish("creation_series", err, 1e-8, start);
}

std::vector<CheckReport> affine_suite_parts(std::uint64_t seed) {
  Rng rng(seed);

  auto t0 = Clock::now();
  double base_err = 0.0;
  for (int t = 0; t < 10; ++t) {
    int d = 2 * (1 + t % 2);
    PhaseSpace ps = random_phase_space(rng, d);
    AffineSpace aff = make_affine_space(ps, ps.T.transpose() * random_vec(rng, d, 0.7));
    ComplexStructure cs = random_structure(rng, ps);
    VacuumForm vf = omega_from_j(ps, cs);
    Vec eta = random_vec(rng, d, 0.7), eta2 = random_vec(rng, d, 0.7);
    SpanSpace sp1 = make_affine_schrodinger_space(aff, vf, true, eta);
    SpanSpace sp2 = make_affine_schrodinger_space(aff, vf, true, eta2);
    CoherentSpan a = random_span(rng, sp1, 2, 2);
    CoherentSpan b = random_span(rng, sp1, 2, 1);
    cplx before = sp1.inner_product(a, b);
    cplx after = sp2.inner_product(rebase_state(sp1, a, eta2), rebase_state(sp1, b, eta2));
    base_err = std::max(base_err, std::abs(after - before) / (1.0 + std::abs(before)));
  }
  CheckReport base = finish("affine_base_change", base_err, 1e-12, t0);

  auto t1 = Clock::now();
  double iso_err = 0.0;
  for (int t = 0; t < 10; ++t) {
    int d = 2 * (1 + t % 2);
    PhaseSpace ps = random_phase_space(rng, d);
    AffineSpace aff = make_affine_space(ps, ps.T.transpose() * random_vec(rng, d, 0.7));
    AffineContext ctx = make_affine_context(aff, random_structure(rng, ps));
    Vec eta = random_vec(rng, d, 0.7);
    SpanSpace red = make_affine_schrodinger_space(aff, ctx.vf, true, eta);
    CoherentSpan a = random_span(rng, red, 2, 2);
    CoherentSpan b = random_span(rng, red, 2, 1);
    cplx before = red.inner_product(a, b);
    cplx after = ctx.holo.inner_product(transform_affine(ctx, affine_reduced_to_full(red, a)),
                                        transform_affine(ctx, affine_reduced_to_full(red, b)));
    iso_err = std::max(iso_err, std::abs(after - before) / (1.0 + std::abs(before)));
  }
  CheckReport iso = finish("affine_transform_isometry", iso_err, 1e-12, t1);

  auto t2 = Clock::now();
  double tw_err = 0.0;
  for (int t = 0; t < 10; ++t) {
    int d = 2 * (1 + t % 2);
    PhaseSpace ps = random_phase_space(rng, d);
    AffineSpace aff = make_affine_space(ps, ps.T.transpose() * random_vec(rng, d, 0.7));
    AffineContext ctx = make_affine_context(aff, random_structure(rng, ps));
    std::normal_distribution<double> cdist(0.0, 1.0);
    AffineObservable F = make_affine_observable(ps, cdist(rng), random_vec(rng, d, 0.8));
    CoherentSpan s = random_span(rng, ctx.full, 2, 2);
    CoherentSpan lhs = transform_affine(ctx, apply_affine_observable(ctx.full, F, s));
    CoherentSpan rhs = apply_affine_observable(ctx.holo, F, transform_affine(ctx, s));
    double ref = ctx.holo.norm(transform_affine(ctx, s));
    tw_err = std::max(tw_err, ctx.holo.norm(span_sub(lhs, rhs)) / ref);
  }
  CheckReport tw = finish("affine_observable_intertwining", tw_err, 1e-9, t2);

  auto t3 = Clock::now();
  double lin_err = 0.0;
  for (int t = 0; t < 10; ++t) {
    int d = 2 * (1 + t % 2);
    PhaseSpace ps = random_phase_space(rng, d);
    AffineSpace aff = make_affine_space(ps, Vec::Zero(d));
    ComplexStructure cs = random_structure(rng, ps);
    VacuumForm vf = omega_from_j(ps, cs);
    Mat G = metric(ps, cs);
    Vec eta = random_vec(rng, d, 0.7), zeta = random_vec(rng, d, 0.7);
    Vec phi = random_vec(rng, d / 2, 0.7);

    // Anchored configuration state reduces to the vacuum.
    cplx anchored = affine_coherent_s(aff, vf, Vec::Zero(d), phi);
    lin_err = std::max(lin_err, std::abs(anchored - vacuum_wavefunction(vf, phi)));

    // Displacement coherent state reduces to the normalized linear one up to
    // the anchor phase and the ground-section factor.
    cplx lhs = affine_coherent_h(aff, G, eta, zeta);
    cplx phase = std::exp(cplx(0, -0.5) * ps.bracket(eta, eta));
    cplx rhs = phase * coherent_h(ps, cs, eta, HolomorphicKind::Normalized, zeta) *
               alpha_fn(ps, cs, zeta);
    lin_err = std::max(lin_err, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
  }
  CheckReport lin = finish("affine_linear_reduction", lin_err, 1e-12, t3);

  return {base, iso, tw, lin};
}

CheckReport check_affine_suite(std::uint64_t seed) {
  return combine_reports("affine_suite", affine_suite_parts(seed));
}

CheckReport check_lattice_vacuum(std::uint64_t seed) {
  auto start = Clock::now();
  Rng rng(seed);
  std::uniform_real_distribution<double> pick(0.5, 2.0);
  double err = 0.0;
  for (int N = 1; N <= 8; ++N) {
    LatticeModel model = build_lattice(N, pick(rng), pick(rng));
    VacuumForm blocks = lattice_vacuum_form(model);
    VacuumForm direct = omega_from_j(model.ps, model.cs);
    err = std::max(err, entry_max(blocks.S - direct.S));
    err = std::max(err, entry_max(blocks.A - direct.A));

    Mat C = two_point(model);
    for (int x = 0; x < N; ++x)
      for (int y = 0; y < N; ++y)
        err = std::max(err, std::abs(C(x, y) - two_point_mode_sum(model, x, y)));
  }
  return finish("lattice_vacuum", err, 1e-10, start);
}

CheckReport check_density_probe() {
  auto start = Clock::now();
  PhaseSpace ps = build_phase_space(e1_bracket());
  VacuumForm vf;
  vf.S = Mat::Identity(1, 1);
  vf.A = Mat::Zero(1, 1);
  SpanSpace reduced = make_schrodinger_space(ps, vf, true);

  CoherentSpan target;
  target.rep = reduced.rep;
  target.terms.push_back({1.0, Vec::Zero(2), Polynomial::variable(1, 0)});

  DensityProbeResult res = density_probe(reduced, target, 8);
  double err = 0.0;
  for (std::size_t j = 0; j + 1 < res.residuals.size(); ++j)
    err = std::max(err, res.residuals[j + 1] - res.residuals[j]);
  err = std::max(err, 0.0);
  bool shrank = res.residuals.back() < 0.9 * res.residuals.front();
  return finish("density_probe", err, 1e-12, start, shrank && !res.regularized);
}

std::vector<CheckReport> all_checks(std::uint64_t seed) {
  return {check_roundtrip(seed),
          check_structure_invariants(seed),
          check_isometry(seed),
          check_coordinate_kernel(seed),
          check_reproducing(seed),
          check_ccr(seed),
          check_intertwine(seed),
          check_exp_creation(seed),
          check_affine_suite(seed),
          check_lattice_vacuum(seed),
          check_density_probe()};
}

}  // namespace geoquant
