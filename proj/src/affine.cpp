#include "geoquant/affine.hpp"

#include <cmath>
#include <stdexcept>

namespace geoquant {

namespace {

cplx dot_nc(const CVec& a, const CVec& b) { return a.cwiseProduct(b).sum(); }

// Polynomial substitution x -> x + shift, one entry per variable.
std::vector<Polynomial> shifted_vars(int nvars, const Vec& shift) {
  std::vector<Polynomial> subs;
  subs.reserve(nvars);
  for (int k = 0; k < nvars; ++k) {
    CVec e = CVec::Zero(nvars);
    e(k) = 1.0;
    subs.push_back(Polynomial::affine(nvars, shift(k), e));
  }
  return subs;
}

CoherentSpan shift_polys(const CoherentSpan& s, Rep rep, const Vec& shift) {
  if (s.terms.empty()) {
    CoherentSpan out = s;
    out.rep = rep;
    return out;
  }
  auto subs = shifted_vars(static_cast<int>(shift.size()), shift);
  CoherentSpan out;
  out.rep = rep;
  for (const auto& t : s.terms) out.terms.push_back({t.coeff, t.label, t.poly.substitute(subs)});
  return out;
}

// Complex symmetric zeta-precision of the inverse integral: minus the total
// quadratic of the holomorphic core times the zeta-dependence of the
// configuration coherent state.
CMat inverse_precision(const AffineContext& ctx) {
  const PhaseSpace& ps = ctx.aff.ps;
  Mat symT = 0.5 * (ps.T + ps.T.transpose());
  Mat qSq = ps.q_map.transpose() * ctx.vf.S * ps.q_map;
  Mat qAq = ps.q_map.transpose() * ctx.vf.A * ps.q_map;
  CMat Pc = (0.25 * ctx.holo.G + 0.5 * qSq).cast<cplx>()
            + cplx(0, 0.5) * (symT + qAq).cast<cplx>();
  Eigen::LLT<Mat> re_chol(0.25 * ctx.holo.G + 0.5 * qSq);
  if (re_chol.info() != Eigen::Success)
    throw std::runtime_error("affine: inverse integral precision not positive definite");
  return Pc;
}

}  // namespace

AffineSpace make_affine_space(const PhaseSpace& ps, const Vec& theta0) {
  if (theta0.size() != ps.dim) throw std::invalid_argument("affine: cocycle size mismatch");
  return {ps, theta0};
}

double theta(const AffineSpace& aff, const Vec& eta, const Vec& tau) {
  return aff.theta0.dot(tau) + aff.ps.bracket(eta, tau);
}

SpanSpace make_affine_holomorphic_space(const AffineSpace& aff, const ComplexStructure& cs) {
  SpanSpace s;
  s.rep = Rep::AffineHolomorphic;
  s.ps = aff.ps;
  s.vf = omega_from_j(aff.ps, cs);
  s.jmat = j_map(aff.ps, cs);
  s.G = metric(aff.ps, cs);
  s.theta0 = aff.theta0;
  s.base = Vec::Zero(aff.ps.dim);
  s.ivars = aff.ps.dim;
  s.pvars = aff.ps.dim;
  Mat symT = 0.5 * (aff.ps.T + aff.ps.T.transpose());
  s.theta_quad = cplx(0, 0.5) * symT.cast<cplx>() - (0.25 * s.G).cast<cplx>();
  s.prec = 0.5 * s.G;
  s.finalize();
  return s;
}

SpanSpace make_affine_schrodinger_space(const AffineSpace& aff, const VacuumForm& vf,
                                        bool reduced, const Vec& base) {
  if (base.size() != aff.ps.dim) throw std::invalid_argument("affine: base size mismatch");
  // Configuration wave functions are constant along fiber directions, so the
  // cocycle vector must annihilate them or the pairing with displacement
  // states picks up an uncompensated phase.
  double fiber = (aff.ps.basis_m.transpose() * aff.theta0).cwiseAbs().maxCoeff();
  if (fiber > 1e-10 * (1.0 + aff.theta0.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("affine: cocycle vector must vanish on fiber directions");
  SpanSpace s;
  s.rep = reduced ? Rep::AffineSchrodingerReduced : Rep::AffineSchrodingerFull;
  s.ps = aff.ps;
  s.vf = vf;
  s.jmat = j_from_vacuum(aff.ps, vf);
  s.G = metric_from_vacuum(aff.ps, vf);
  s.theta0 = aff.theta0;
  s.base = base;
  s.ivars = aff.ps.n();
  s.pvars = aff.ps.n();
  if (!reduced) s.theta_quad = -0.5 * vf.omega();
  s.prec = vf.S;
  s.finalize();
  return s;
}

AffineContext make_affine_context(const AffineSpace& aff, const ComplexStructure& cs) {
  AffineContext ctx;
  ctx.aff = aff;
  ctx.cs = validate_complex_structure(aff.ps, cs.J);
  ctx.vf = omega_from_j(aff.ps, ctx.cs);
  ctx.holo = make_affine_holomorphic_space(aff, ctx.cs);
  ctx.full = make_affine_schrodinger_space(aff, ctx.vf, false, Vec::Zero(aff.ps.dim));
  return ctx;
}

cplx affine_coherent_h(const AffineSpace& aff, const Mat& G, const Vec& eta, const Vec& zeta) {
  Vec d = zeta - eta;
  cplx e = cplx(0, 0.5) * (theta(aff, eta, d) + theta(aff, zeta, d)) - 0.25 * d.dot(G * d);
  return std::exp(e);
}

cplx affine_coherent_s(const AffineSpace& aff, const VacuumForm& vf, const Vec& zeta,
                       const Vec& phi) {
  const PhaseSpace& ps = aff.ps;
  Vec u = phi - ps.quotient(zeta);
  CVec uc = u.cast<cplx>();
  cplx e = cplx(0, 1) * theta(aff, zeta, ps.lift(u)) - 0.5 * dot_nc(uc, vf.omega() * uc);
  return std::exp(e);
}

cplx base_change_factor(const AffineSpace& aff, const VacuumForm& vf, const Vec& eta,
                        const Vec& eta2, const Vec& phi) {
  const PhaseSpace& ps = aff.ps;
  Vec d = eta2 - eta;
  CVec qd = ps.quotient(d).cast<cplx>();
  CVec pc = phi.cast<cplx>();
  CMat Om = vf.omega();
  cplx e = cplx(0, 1) * theta(aff, eta, d) - 0.5 * dot_nc(qd, Om * qd)
           - cplx(0, 1) * ps.bracket(d, ps.lift(phi)) - dot_nc(qd, Om * pc);
  return std::exp(e);
}

CoherentSpan rebase_state(const SpanSpace& space, const CoherentSpan& s, const Vec& new_base) {
  if (space.rep != Rep::AffineSchrodingerReduced || s.rep != space.rep)
    throw std::invalid_argument("affine: rebasing needs the reduced flavor");
  Vec shift = space.ps.quotient(new_base - space.base);
  return shift_polys(s, s.rep, shift);
}

CoherentSpan affine_reduced_to_full(const SpanSpace& reduced_space, const CoherentSpan& s) {
  if (reduced_space.rep != Rep::AffineSchrodingerReduced || s.rep != reduced_space.rep)
    throw std::invalid_argument("affine: conversion needs the reduced flavor");
  Vec shift = -reduced_space.ps.quotient(reduced_space.base);
  return shift_polys(s, Rep::AffineSchrodingerFull, shift);
}

CoherentSpan affine_full_to_reduced(const AffineContext& ctx, const CoherentSpan& s,
                                    const Vec& base) {
  if (s.rep != Rep::AffineSchrodingerFull)
    throw std::invalid_argument("affine: conversion needs the full flavor");
  Vec shift = ctx.aff.ps.quotient(base);
  return shift_polys(s, Rep::AffineSchrodingerReduced, shift);
}

CoherentSpan transform_affine(const AffineContext& ctx, const CoherentSpan& s) {
  if (s.rep != Rep::AffineSchrodingerFull)
    throw std::invalid_argument("affine: forward transform expects the full flavor");
  const PhaseSpace& ps = ctx.aff.ps;
  const int n = ps.n();
  const int dim = ps.dim;
  Mat Si = ctx.vf.S.inverse();
  CMat Sic = (0.5 * Si).cast<cplx>();
  // beta(zeta) = l_label + conj(l_zeta) with l_zeta from the configuration
  // coherent core, affine in the real displacement zeta.
  CVec bconst0 = -cplx(0, 1) * (ps.basis_n.transpose() * ctx.aff.theta0).cast<cplx>();
  CMat bmat = -cplx(0, 1) * (ps.basis_n.transpose() * ps.T.transpose()).cast<cplx>()
              + ctx.vf.omega().conjugate() * ps.q_map.cast<cplx>();

  CoherentSpan out;
  out.rep = Rep::AffineHolomorphic;
  for (const auto& t : s.terms) {
    CoreExponent e = ctx.full.core(t.label);
    CVec mu0 = Sic * (e.l + bconst0);
    CMat mumat = Sic * bmat;
    std::vector<Polynomial> mean;
    mean.reserve(n);
    for (int k = 0; k < n; ++k)
      mean.push_back(Polynomial::affine(dim, mu0(k), mumat.row(k).transpose()));
    out.terms.push_back({t.coeff, t.label, gaussian_shifted_expectation(t.poly, mean, Sic, dim)});
  }
  return out;
}

CoherentSpan transform_affine_inverse(const AffineContext& ctx, const CoherentSpan& s) {
  if (s.rep != Rep::AffineHolomorphic)
    throw std::invalid_argument("affine: inverse transform expects the holomorphic flavor");
  const PhaseSpace& ps = ctx.aff.ps;
  const int n = ps.n();
  const int dim = ps.dim;
  CMat Pc = inverse_precision(ctx);
  CMat Pci = Pc.inverse();
  CMat cov = 0.5 * Pci;
  // Ratio of the measure Gaussian to the completed square (identically one
  // on adapted instances, kept for exactness).
  cplx ratio = std::sqrt(cplx(Mat(0.5 * ctx.holo.G).determinant(), 0.0) / Pc.determinant());
  // zeta-linear part of the configuration coherent core at argument phi.
  CVec bconst0 = -cplx(0, 1) * (ps.q_map.transpose() * ps.basis_n.transpose() * ctx.aff.theta0)
                                   .cast<cplx>();
  CMat bmat = cplx(0, 1) * (ps.T * ps.basis_n).cast<cplx>()
              + ps.q_map.transpose().cast<cplx>() * ctx.vf.omega();

  CoherentSpan out;
  out.rep = Rep::AffineSchrodingerFull;
  for (const auto& t : s.terms) {
    CoreExponent e = ctx.holo.core(t.label);
    CVec mu0 = 0.5 * Pci * (e.l + bconst0);
    CMat mumat = 0.5 * Pci * bmat;
    std::vector<Polynomial> mean;
    mean.reserve(dim);
    for (int k = 0; k < dim; ++k)
      mean.push_back(Polynomial::affine(n, mu0(k), mumat.row(k).transpose()));
    out.terms.push_back(
        {t.coeff * ratio, t.label, gaussian_shifted_expectation(t.poly, mean, cov, n)});
  }
  return out;
}

cplx transform_affine_quadrature(const AffineContext& ctx,
                                 const std::function<cplx(const Vec&)>& psi, const Vec& zeta,
                                 int order) {
  GaussianMeasure mu = make_gaussian(ctx.vf.S);
  auto f = [&](const Vec& phi) {
    return psi(phi) * std::conj(affine_coherent_s(ctx.aff, ctx.vf, zeta, phi)) *
           std::exp(phi.dot(ctx.vf.S * phi));
  };
  return integrate(f, mu, order);
}

cplx transform_affine_inverse_quadrature(const AffineContext& ctx,
                                         const std::function<cplx(const Vec&)>& psi,
                                         const Vec& phi, int order) {
  GaussianMeasure mu = make_gaussian(0.5 * ctx.holo.G);
  auto f = [&](const Vec& zeta) {
    return psi(zeta) * affine_coherent_s(ctx.aff, ctx.vf, zeta, phi) *
           std::exp(zeta.dot(0.5 * ctx.holo.G * zeta));
  };
  return integrate(f, mu, order);
}

cplx pairing_affine_closed(const AffineContext& ctx, const CoherentSpan& hspan,
                           const CoherentSpan& sspan) {
  return ctx.holo.inner_product(hspan, transform_affine(ctx, sspan));
}

cplx pairing_affine_quadrature(const AffineContext& ctx,
                               const std::function<cplx(const Vec&)>& hpsi,
                               const std::function<cplx(const Vec&)>& spsi, int order) {
  const PhaseSpace& ps = ctx.aff.ps;
  Mat qS = ps.q_map.transpose() * ctx.vf.S * ps.q_map;
  Mat Peff = 0.25 * ctx.holo.G + 0.5 * qS;
  GaussianMeasure eff = make_gaussian(Peff);
  GaussianMeasure muA = make_gaussian(0.5 * ctx.holo.G);
  auto g = [&](const Vec& zeta) {
    return std::conj(hpsi(zeta)) * spsi(ps.quotient(zeta)) * std::exp(zeta.dot(Peff * zeta));
  };
  return (muA.Z / eff.Z) * integrate(g, eff, order);
}

AffineObservable make_affine_observable(const PhaseSpace& ps, double constant, const Vec& f) {
  return {constant, f, hamiltonian_vector(ps, f)};
}

CoherentSpan apply_affine_observable(const SpanSpace& space, const AffineObservable& F,
                                     const CoherentSpan& s) {
  const PhaseSpace& ps = space.ps;
  const int n = ps.n();
  const cplx mi(0, -1);
  switch (space.rep) {
    case Rep::AffineHolomorphic: {
      // Multiplier F(zeta) - theta(zeta, X), derivative along the real field.
      cplx c0 = F.constant - space.theta0.dot(F.X);
      CVec lin = (F.f - ps.T * F.X).cast<cplx>();
      Polynomial mult = Polynomial::affine(ps.dim, c0, lin);
      CVec v = F.X.cast<cplx>();
      return apply_multiplier_derivative(space, mult, v, v, mi, s);
    }
    case Rep::AffineSchrodingerFull: {
      cplx c0 = F.constant - space.theta0.dot(ps.lift(ps.quotient(F.X)));
      CVec lin = -(ps.basis_n.transpose() * ps.T.transpose() * F.X).cast<cplx>();
      Polynomial mult = Polynomial::affine(n, c0, lin);
      CVec v = ps.quotient(F.X).cast<cplx>();
      return apply_multiplier_derivative(space, mult, v, v, mi, s);
    }
    case Rep::AffineSchrodingerReduced: {
      cplx c0 = F.constant + F.f.dot(space.base);
      CVec lin = -(ps.basis_n.transpose() * ps.T.transpose() * F.X).cast<cplx>()
                 + cplx(0, 1) * (space.vf.omega() * ps.quotient(F.X).cast<cplx>());
      Polynomial mult = Polynomial::affine(n, c0, lin);
      CVec v = ps.quotient(F.X).cast<cplx>();
      return apply_multiplier_derivative(space, mult, v, v, mi, s);
    }
    default:
      throw std::invalid_argument("affine: observable needs an affine representation");
  }
}

}  // namespace geoquant
