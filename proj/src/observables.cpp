#include "geoquant/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace geoquant {

namespace {

cplx dot_nc(const CVec& a, const CVec& b) { return a.cwiseProduct(b).sum(); }

}  // namespace

CoherentSpan apply_multiplier_derivative(const SpanSpace& space, const Polynomial& mult,
                                         const CVec& v, const CVec& dvec, cplx dcoef,
                                         const CoherentSpan& s) {
  CVec tv = space.theta_quad.size() > 0 ? CVec(2.0 * (space.theta_quad * v))
                                        : CVec(CVec::Zero(space.ivars));
  bool has_theta = tv.norm() > 0.0;
  if (has_theta && space.pvars != space.ivars)
    throw std::runtime_error("observable: quadratic core needs identity polynomial frame");

  CoherentSpan out;
  out.rep = s.rep;
  for (const auto& t : s.terms) {
    CoreExponent e = space.core(t.label);
    Polynomial scalar = mult + Polynomial::constant(space.pvars, dcoef * dot_nc(e.l, v));
    if (has_theta) scalar = scalar + Polynomial::affine(space.pvars, 0.0, dcoef * tv);
    Polynomial dpoly(space.pvars);
    for (int k = 0; k < space.pvars; ++k)
      if (dvec(k) != 0.0) dpoly = dpoly + t.poly.derivative(k) * dvec(k);
    out.terms.push_back({t.coeff, t.label, scalar * t.poly + dpoly * dcoef});
  }
  return out;
}

Vec hamiltonian_vector(const PhaseSpace& ps, const Vec& f) {
  if (f.size() != ps.dim) throw std::invalid_argument("observable: bad functional size");
  Eigen::FullPivLU<Mat> lu(2.0 * ps.W);
  if (!lu.isInvertible())
    throw std::invalid_argument("observable: degenerate form, no Hamiltonian vector");
  return lu.solve(f);
}

LinearObservable make_observable(const PhaseSpace& ps, const Vec& f) {
  return {f, hamiltonian_vector(ps, f)};
}

std::pair<CVec, CVec> split_pm(const ComplexStructure& cs, const Vec& f) {
  CVec jf = (cs.J.transpose() * f).cast<cplx>();
  CVec fc = f.cast<cplx>();
  return {0.5 * (fc - cplx(0, 1) * jf), 0.5 * (fc + cplx(0, 1) * jf)};
}

CoherentSpan apply_observable(const SpanSpace& space, const LinearObservable& F,
                              const CoherentSpan& s) {
  const int n = space.ps.n();
  const cplx mi(0, -1);
  switch (space.rep) {
    case Rep::SchrodingerFull:
    case Rep::SchrodingerReduced: {
      Vec mvec = -(space.ps.basis_n.transpose() * space.ps.T.transpose() * F.X);
      CVec mc = mvec.cast<cplx>();
      if (space.rep == Rep::SchrodingerReduced) {
        CMat omega = space.vf.omega();
        mc += cplx(0, 1) * (omega * (space.ps.q_map * F.X).cast<cplx>());
      }
      Polynomial mult = Polynomial::affine(n, 0.0, mc);
      CVec v = (space.ps.q_map * F.X).cast<cplx>();
      return apply_multiplier_derivative(space, mult, v, v, mi, s);
    }
    case Rep::Holomorphic: {
      // F = w.z + u.zbar; the creation part w.z multiplies.  The derivative
      // runs along the holomorphic projection of X, for which the core slope
      // satisfies l.v = l.X and the variable direction is z(X).
      CMat stack(space.ps.dim, 2 * n);
      stack.leftCols(n) = space.zmat.transpose();
      stack.rightCols(n) = space.zmat.conjugate().transpose();
      CVec wu = stack.fullPivLu().solve(F.f.cast<cplx>());
      if ((stack * wu - F.f.cast<cplx>()).norm() > 1e-10 * (1.0 + F.f.norm()))
        throw std::runtime_error("observable: functional outside the z frame span");
      Polynomial mult = Polynomial::affine(n, 0.0, wu.head(n));
      CVec v = F.X.cast<cplx>();
      CVec dvec = space.zmat * v;
      return apply_multiplier_derivative(space, mult, v, dvec, mi, s);
    }
    default:
      throw std::invalid_argument("observable: affine spans take affine observables");
  }
}

cplx expected_commutator(const PhaseSpace& ps, const LinearObservable& F,
                         const LinearObservable& G) {
  return cplx(0, -2) * ps.omega(F.X, G.X);
}

CommutatorDefect commutator_defect(const SpanSpace& space, const LinearObservable& F,
                                   const LinearObservable& G, const CoherentSpan& s) {
  CoherentSpan fg = apply_observable(space, F, apply_observable(space, G, s));
  CoherentSpan gf = apply_observable(space, G, apply_observable(space, F, s));
  CoherentSpan comm = span_sub(fg, gf);
  cplx nrm2 = space.inner_product(s, s);
  cplx constant = space.inner_product(s, comm) / nrm2;
  CoherentSpan dev = span_sub(comm, span_scale(s, constant));
  double defect = space.norm(dev) / std::sqrt(std::abs(nrm2));
  return {constant, defect};
}

CreationResult exp_creation_on_vacuum(const SpanSpace& holo, const ComplexStructure& cs,
                                      const LinearObservable& F, int cap) {
  if (holo.rep != Rep::Holomorphic)
    throw std::invalid_argument("observable: creation series lives in the holomorphic space");
  const int n = holo.ps.n();
  Vec tau = -(cs.J * F.X);
  CVec w = (holo.zmat * tau.cast<cplx>()).conjugate();
  double a = w.squaredNorm();

  auto tail = [&](int m) {
    double term = 1.0, sum = 0.0;
    for (int k = 1; k <= m + 1; ++k) term *= a / k;
    for (int k = m + 1; k < m + 400; ++k) {
      sum += term;
      term *= a / (k + 1);
      if (term < 1e-18 * (sum + 1.0)) break;
    }
    return sum;
  };
  while (tail(cap) > 1e-10 && cap < 120) ++cap;

  Polynomial mult = Polynomial::affine(n, 0.0, w);
  Polynomial acc = Polynomial::constant(n, 1.0);
  Polynomial sum = acc;
  for (int k = 1; k <= cap; ++k) {
    acc = acc * mult * cplx(1.0 / k, 0.0);
    sum = sum + acc;
  }
  CoherentSpan series;
  series.rep = Rep::Holomorphic;
  series.terms.push_back({1.0, Vec::Zero(holo.ps.dim), sum});
  return {series, tau, cap, std::sqrt(tail(cap))};
}

double intertwine_defect(const BargmannContext& ctx, const LinearObservable& F,
                         const CoherentSpan& s) {
  const SpanSpace& sch = s.rep == Rep::SchrodingerReduced ? ctx.reduced : ctx.full;
  CoherentSpan lhs = transform(ctx, apply_observable(sch, F, s));
  CoherentSpan rhs = apply_observable(ctx.holo, F, transform(ctx, s));
  double ref = ctx.holo.norm(transform(ctx, s));
  return ctx.holo.norm(span_sub(lhs, rhs)) / ref;
}

}  // namespace geoquant
