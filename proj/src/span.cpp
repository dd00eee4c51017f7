#include "geoquant/span.hpp"

#include <stdexcept>

namespace geoquant {

namespace {

Mat pairing_matrix(const PhaseSpace& ps) {
  return ps.basis_m.transpose() * ps.T * ps.basis_n;
}

cplx dot_nc(const CVec& a, const CVec& b) {  // bilinear dot, no conjugation
  return (a.array() * b.array()).sum();
}

}  // namespace

Mat j_from_vacuum(const PhaseSpace& ps, const VacuumForm& vf) {
  Mat P = pairing_matrix(ps);
  return ps.basis_n - ps.basis_m * P.transpose().inverse() * vf.A;
}

Mat metric_from_vacuum(const PhaseSpace& ps, const VacuumForm& vf) {
  Mat j = j_from_vacuum(ps, vf);
  Mat P = pairing_matrix(ps);
  Mat Si = vf.S.inverse();
  // L splits g-orthogonally into j(Q) and M; on j(Q) the metric is S, on M
  // it is pulled back through beta^{-1}.
  Mat mcoef = ps.m_map * (Mat::Identity(ps.dim, ps.dim) - j * ps.q_map);
  return ps.q_map.transpose() * vf.S * ps.q_map
         + mcoef.transpose() * P * Si * P.transpose() * mcoef;
}

CoreExponent SpanSpace::core(const Vec& label) const {
  CMat Om = vf.omega();
  auto affine_full = [&](const Vec& zeta) -> CoreExponent {
    Vec t = theta0 + ps.T.transpose() * zeta;
    CVec q = ps.quotient(zeta).cast<cplx>();
    CVec l = cplx(0, 1) * (ps.basis_n.transpose() * t).cast<cplx>() + Om * q;
    cplx c = -cplx(0, 1) * t.dot(ps.lift(ps.quotient(zeta))) - 0.5 * dot_nc(q, Om * q);
    return {c, l};
  };
  switch (rep) {
    case Rep::SchrodingerReduced:
    case Rep::SchrodingerFull: {
      CVec q = ps.quotient(label).cast<cplx>();
      CVec l = Om * q + cplx(0, 1) * (ps.basis_n.transpose() * ps.T.transpose() * label).cast<cplx>();
      cplx c = -0.5 * dot_nc(q, Om * q) - cplx(0, 0.5) * ps.bracket(label, label);
      if (rep == Rep::SchrodingerFull) c += 0.25 * label_metric(label, label);
      return {c, l};
    }
    case Rep::Holomorphic: {
      CVec l = 0.5 * (G * label).cast<cplx>() - cplx(0, 1) * (ps.W * label).cast<cplx>();
      return {cplx(0.0), l};
    }
    case Rep::AffineHolomorphic: {
      // exp((i/2) theta(eta, zeta-eta) + (i/2) theta(zeta, zeta-eta)
      //     - g(zeta-eta, zeta-eta)/4), expanded around the anchor.
      CVec l = cplx(0, 1) * theta0.cast<cplx>() - cplx(0, 1) * (ps.W * label).cast<cplx>()
               + 0.5 * (G * label).cast<cplx>();
      cplx c = -cplx(0, 1) * theta0.dot(label) - cplx(0, 0.5) * ps.bracket(label, label)
               - 0.25 * label.dot(G * label);
      return {c, l};
    }
    case Rep::AffineSchrodingerFull:
      return affine_full(label);
    case Rep::AffineSchrodingerReduced: {
      // Full affine core of the label divided by the core of the base point,
      // both shifted to arguments relative to the base configuration.
      CoreExponent et = affine_full(label);
      CoreExponent eb = affine_full(base);
      CVec l = et.l - eb.l;
      CVec s = ps.quotient(base).cast<cplx>();
      cplx c = et.c - eb.c + dot_nc(l, s);
      return {c, l};
    }
  }
  throw std::logic_error("span: unknown representation");
}

CVec SpanSpace::poly_vars(const Vec& x) const {
  if (zmat.size() > 0) return zmat * x.cast<cplx>();
  return x.cast<cplx>();
}

cplx SpanSpace::evaluate(const CoherentSpan& s, const Vec& x) const {
  if (s.rep != rep) throw std::invalid_argument("span: representation mismatch");
  if (x.size() != ivars) throw std::invalid_argument("span: argument size mismatch");
  CVec pv = poly_vars(x);
  CVec xc = x.cast<cplx>();
  cplx quad = theta_quad.size() > 0 ? dot_nc(xc, theta_quad * xc) : cplx(0.0);
  cplx acc = 0.0;
  for (const auto& t : s.terms) {
    CoreExponent e = core(t.label);
    acc += t.coeff * t.poly.eval(pv) * std::exp(e.c + dot_nc(e.l, xc) + quad);
  }
  return acc;
}

cplx SpanSpace::inner_product(const CoherentSpan& a, const CoherentSpan& b) const {
  if (a.rep != rep || b.rep != rep)
    throw std::invalid_argument("span: representation mismatch in inner product");
  // Merging coincident labels first keeps residual norms of nearly equal
  // spans at coefficient scale instead of the cancellation floor of the
  // term-by-term Gaussian overlaps.
  CoherentSpan ca = span_compact(a), cb = span_compact(b);
  cplx acc = 0.0;
  for (const auto& ta : ca.terms) {
    CoreExponent ea = core(ta.label);
    Polynomial bra = ta.poly.conj_coeffs().substitute(zbar_polys_);
    for (const auto& tb : cb.terms) {
      CoreExponent eb = core(tb.label);
      CVec beta = ea.l.conjugate() + eb.l;
      cplx gamma = std::conj(ea.c) + eb.c;
      Vec br = beta.real(), bi = beta.imag();
      CVec pinv_beta = prec_llt_.solve(br).cast<cplx>()
                       + cplx(0, 1) * prec_llt_.solve(bi).cast<cplx>();
      cplx e0 = std::exp(gamma + 0.25 * dot_nc(beta, pinv_beta));
      cplx mom;
      if (ta.poly.degree() == 0 && tb.poly.degree() == 0) {
        mom = ta.poly.conj_coeffs().eval(CVec::Zero(pvars)) * tb.poly.eval(CVec::Zero(pvars));
      } else {
        Polynomial ket = tb.poly.substitute(z_polys_);
        Polynomial prod = bra * ket;
        CVec mu = 0.5 * pinv_beta;
        std::vector<Polynomial> mean;
        mean.reserve(ivars);
        for (int k = 0; k < ivars; ++k) mean.push_back(Polynomial::constant(0, mu(k)));
        mom = gaussian_shifted_expectation(prod, mean, pair_cov_, 0).eval(CVec(0));
      }
      acc += std::conj(ta.coeff) * tb.coeff * e0 * mom;
    }
  }
  return acc;
}

CoherentSpan span_compact(const CoherentSpan& s) {
  CoherentSpan out;
  out.rep = s.rep;
  for (const auto& t : s.terms) {
    bool merged = false;
    for (auto& u : out.terms) {
      double scale = 1.0 + u.label.cwiseAbs().maxCoeff();
      if ((u.label - t.label).cwiseAbs().maxCoeff() <= 1e-12 * scale) {
        u.poly += t.poly * t.coeff;
        merged = true;
        break;
      }
    }
    if (!merged) out.terms.push_back({cplx(1.0, 0.0), t.label, t.poly * t.coeff});
  }
  std::vector<SpanTerm> kept;
  for (auto& u : out.terms)
    if (!u.poly.is_zero()) kept.push_back(std::move(u));
  out.terms = std::move(kept);
  return out;
}

double SpanSpace::norm(const CoherentSpan& s) const {
  double v = inner_product(s, s).real();
  return std::sqrt(std::max(v, 0.0));
}

double SpanSpace::label_metric(const Vec& tau, const Vec& tau2) const {
  return tau.dot(G * tau2);
}

CVec SpanSpace::holomorphic_form(const CVec& w, double tol) const {
  if (zmat.size() == 0) throw std::logic_error("span: no holomorphic coordinates here");
  const int n = pvars;
  CMat sys(ps.dim, 2 * n);
  sys.leftCols(n) = zmat.transpose();
  sys.rightCols(n) = zmat.conjugate().transpose();
  CVec sol = sys.fullPivLu().solve(w);
  double resid = sol.tail(n).norm();
  if (resid > tol * (1.0 + w.norm()))
    throw std::invalid_argument("span: functional is not holomorphic");
  return sol.head(n);
}

void SpanSpace::finalize() {
  z_polys_.clear();
  zbar_polys_.clear();
  if (zmat.size() > 0) {
    for (int k = 0; k < pvars; ++k) {
      z_polys_.push_back(Polynomial::affine(ivars, 0.0, zmat.row(k).transpose()));
      zbar_polys_.push_back(Polynomial::affine(ivars, 0.0, zmat.row(k).conjugate().transpose()));
    }
  } else {
    for (int k = 0; k < pvars; ++k) {
      z_polys_.push_back(Polynomial::variable(ivars, k));
      zbar_polys_.push_back(Polynomial::variable(ivars, k));
    }
  }
  prec_llt_.compute(prec);
  if (prec_llt_.info() != Eigen::Success)
    throw std::invalid_argument("span: pairing precision is not positive definite");
  pair_cov_ = (0.5 * prec.inverse()).cast<cplx>();
}

SpanSpace make_schrodinger_space(const PhaseSpace& ps, const VacuumForm& vf, bool reduced) {
  SpanSpace s;
  s.rep = reduced ? Rep::SchrodingerReduced : Rep::SchrodingerFull;
  s.ps = ps;
  s.vf = vf;
  s.jmat = j_from_vacuum(ps, vf);
  s.G = metric_from_vacuum(ps, vf);
  s.theta0 = Vec::Zero(ps.dim);
  s.base = Vec::Zero(ps.dim);
  s.ivars = ps.n();
  s.pvars = ps.n();
  if (!reduced) s.theta_quad = -0.5 * vf.omega();
  s.prec = vf.S;
  s.finalize();
  return s;
}

SpanSpace make_holomorphic_space(const PhaseSpace& ps, const ComplexStructure& cs) {
  SpanSpace s;
  s.rep = Rep::Holomorphic;
  s.ps = ps;
  s.vf = omega_from_j(ps, cs);
  s.jmat = j_map(ps, cs);
  s.G = metric(ps, cs);
  s.theta0 = Vec::Zero(ps.dim);
  s.base = Vec::Zero(ps.dim);
  s.ivars = ps.dim;
  s.pvars = ps.n();
  s.prec = 0.5 * s.G;
  Eigen::SelfAdjointEigenSolver<Mat> es(s.vf.S);
  Mat shalf_inv = es.operatorInverseSqrt();
  CMat gw = s.G.cast<cplx>() + cplx(0, 2) * ps.W.cast<cplx>();
  s.zmat = (1.0 / std::sqrt(2.0)) * shalf_inv.cast<cplx>() * s.jmat.transpose().cast<cplx>() * gw;
  s.finalize();
  return s;
}

CoherentSpan coherent_span(const SpanSpace& space, const Vec& label, cplx coeff) {
  CoherentSpan s;
  s.rep = space.rep;
  s.terms.push_back({coeff, label, Polynomial::constant(space.pvars, 1.0)});
  return s;
}

CoherentSpan span_add(const CoherentSpan& a, const CoherentSpan& b) {
  if (a.rep != b.rep) throw std::invalid_argument("span: representation mismatch in sum");
  CoherentSpan r = a;
  r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
  return r;
}

CoherentSpan span_scale(const CoherentSpan& a, cplx s) {
  CoherentSpan r = a;
  for (auto& t : r.terms) t.coeff *= s;
  return r;
}

CoherentSpan span_sub(const CoherentSpan& a, const CoherentSpan& b) {
  return span_add(a, span_scale(b, -1.0));
}

CMat gram(const SpanSpace& space, const std::vector<CoherentSpan>& family) {
  const int k = static_cast<int>(family.size());
  CMat g(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) g(i, j) = space.inner_product(family[i], family[j]);
  return g;
}

}  // namespace geoquant
