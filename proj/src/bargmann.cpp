#include "geoquant/bargmann.hpp"

#include <cmath>
#include <stdexcept>

namespace geoquant {

namespace {

// {j(phi), xi} = phi^T Cb xi with Cb = j^T (G + 2iW).
CMat braces_map(const SpanSpace& holo) {
  CMat gw = holo.G.cast<cplx>() + cplx(0, 2) * holo.ps.W.cast<cplx>();
  return holo.jmat.transpose().cast<cplx>() * gw;
}

void require_adapted_frame(const BargmannContext& ctx) {
  Mat defect = ctx.ps.m_map * (ctx.cs.J * ctx.ps.basis_m);
  double scale = (ctx.cs.J * ctx.ps.basis_m).norm();
  if (defect.norm() > 1e-10 * (1.0 + scale))
    throw std::invalid_argument("bargmann: coordinate comparison needs N = J M");
}

CoherentSpan to_full(const SpanSpace& full, const CoherentSpan& s) {
  CoherentSpan r;
  r.rep = Rep::SchrodingerFull;
  for (const auto& t : s.terms) {
    double g = full.label_metric(t.label, t.label);
    r.terms.push_back({t.coeff * std::exp(-0.25 * g), t.label, t.poly});
  }
  return r;
}

CoherentSpan from_full(const SpanSpace& full, const CoherentSpan& s) {
  CoherentSpan r;
  r.rep = Rep::SchrodingerReduced;
  for (const auto& t : s.terms) {
    double g = full.label_metric(t.label, t.label);
    r.terms.push_back({t.coeff * std::exp(0.25 * g), t.label, t.poly});
  }
  return r;
}

}  // namespace

BargmannContext make_bargmann(const PhaseSpace& ps, const ComplexStructure& cs) {
  BargmannContext ctx;
  ctx.ps = ps;
  ctx.cs = validate_complex_structure(ps, cs.J);
  ctx.vf = omega_from_j(ps, ctx.cs);
  ctx.full = make_schrodinger_space(ps, ctx.vf, false);
  ctx.reduced = make_schrodinger_space(ps, ctx.vf, true);
  ctx.holo = make_holomorphic_space(ps, ctx.cs);
  return ctx;
}

cplx kernel(const BargmannContext& ctx, const Vec& xi, const Vec& phi) {
  const Mat& G = ctx.holo.G;
  const Mat& j = ctx.holo.jmat;
  Vec jphi = j * phi;
  Vec jq = j * ctx.ps.quotient(xi);
  cplx e = braces(ctx.ps, ctx.cs, jphi, xi);
  e -= cplx(0, 0.5) * ctx.ps.bracket(jphi, jphi);
  e -= 0.5 * jphi.dot(G * jphi);
  e += 0.25 * xi.dot(G * xi);
  e -= 0.5 * braces(ctx.ps, ctx.cs, jq, xi);
  return std::exp(e);
}

cplx coordinate_kernel(int n, const CVec& z, const Vec& q) {
  if (z.size() != n || q.size() != n)
    throw std::invalid_argument("bargmann: coordinate size mismatch");
  cplx e = 0.0;
  for (int k = 0; k < n; ++k)
    e += std::sqrt(2.0) * q(k) * z(k) - 0.5 * q(k) * q(k) - 0.5 * z(k) * z(k);
  return std::exp(e);
}

CVec z_coords(const BargmannContext& ctx, const Vec& xi) {
  require_adapted_frame(ctx);
  return ctx.holo.zmat * xi.cast<cplx>();
}

Vec q_coords(const BargmannContext& ctx, const Vec& phi) {
  require_adapted_frame(ctx);
  Eigen::SelfAdjointEigenSolver<Mat> es(ctx.vf.S);
  return es.operatorSqrt() * phi;
}

CoherentSpan transform(const BargmannContext& ctx, const CoherentSpan& s) {
  if (s.rep != Rep::SchrodingerFull && s.rep != Rep::SchrodingerReduced)
    throw std::invalid_argument("bargmann: forward transform expects a Schrodinger span");
  CoherentSpan src = s.rep == Rep::SchrodingerReduced ? to_full(ctx.full, s) : s;

  const int n = ctx.ps.n();
  Mat Si = ctx.vf.S.inverse();
  CMat Cb = braces_map(ctx.holo);
  CMat M = 0.5 * Si.cast<cplx>() * Cb;  // rows are holomorphic functionals
  CMat zrows(n, n);
  for (int k = 0; k < n; ++k) zrows.row(k) = ctx.holo.holomorphic_form(M.row(k).transpose());
  CMat cov = (0.5 * Si).cast<cplx>();

  CoherentSpan out;
  out.rep = Rep::Holomorphic;
  for (const auto& t : src.terms) {
    CoreExponent e = ctx.full.core(t.label);
    CVec mu0 = 0.5 * Si.cast<cplx>() * e.l;
    std::vector<Polynomial> mean;
    mean.reserve(n);
    for (int k = 0; k < n; ++k)
      mean.push_back(Polynomial::affine(n, mu0(k), zrows.row(k).transpose()));
    out.terms.push_back({t.coeff, t.label, gaussian_shifted_expectation(t.poly, mean, cov, n)});
  }
  return out;
}

CoherentSpan transform_inverse(const BargmannContext& ctx, const CoherentSpan& s, Rep target) {
  if (s.rep != Rep::Holomorphic)
    throw std::invalid_argument("bargmann: inverse transform expects a holomorphic span");
  if (target != Rep::SchrodingerFull && target != Rep::SchrodingerReduced)
    throw std::invalid_argument("bargmann: inverse target must be a Schrodinger flavor");

  const int n = ctx.ps.n();
  const int dim = ctx.ps.dim;
  const Mat& G = ctx.holo.G;
  Mat qj = ctx.ps.q_map.transpose() * ctx.holo.jmat.transpose();  // dim x dim, q^T j^T
  Mat Sg = 0.5 * (qj * G + (qj * G).transpose());
  Mat Sw = 0.5 * (qj * ctx.ps.W + (qj * ctx.ps.W).transpose());
  CMat Pc = (0.25 * G + 0.5 * Sg).cast<cplx>() - cplx(0, 1) * Sw.cast<cplx>();
  Eigen::LLT<Mat> re_chol(0.25 * G + 0.5 * Sg);
  if (re_chol.info() != Eigen::Success)
    throw std::runtime_error("bargmann: inverse integral precision not positive definite");
  CMat Pci = Pc.inverse();
  CMat Cb = braces_map(ctx.holo);
  CMat Mmap = 0.5 * Pci * Cb.adjoint();  // dim x n
  CMat cov = 0.5 * Pci;
  // Ratio of the measure Gaussian to the completed square (identically one
  // on adapted instances, kept for exactness).
  cplx ratio = std::sqrt(cplx(Mat(0.5 * G).determinant(), 0.0) / Pc.determinant());

  CoherentSpan out;
  out.rep = Rep::SchrodingerFull;
  for (const auto& t : s.terms) {
    CoreExponent e = ctx.holo.core(t.label);
    CVec mu0 = 0.5 * Pci * e.l;
    std::vector<Polynomial> mean;
    mean.reserve(dim);
    for (int k = 0; k < dim; ++k)
      mean.push_back(Polynomial::affine(n, mu0(k), Mmap.row(k).transpose()));
    Polynomial p_xi = t.poly.substitute(ctx.holo.z_polys());
    out.terms.push_back(
        {t.coeff * ratio, t.label, gaussian_shifted_expectation(p_xi, mean, cov, n)});
  }
  return target == Rep::SchrodingerReduced ? from_full(ctx.full, out) : out;
}

cplx transform_quadrature(const BargmannContext& ctx,
                          const std::function<cplx(const Vec&)>& psi, const Vec& xi,
                          int order) {
  GaussianMeasure mu = make_gaussian(ctx.vf.S);
  auto f = [&](const Vec& phi) {
    return psi(phi) * kernel(ctx, xi, phi) * std::exp(phi.dot(ctx.vf.S * phi));
  };
  return integrate(f, mu, order);
}

cplx transform_inverse_quadrature(const BargmannContext& ctx,
                                  const std::function<cplx(const Vec&)>& psi, const Vec& phi,
                                  int order) {
  GaussianMeasure nu = make_gaussian(0.5 * ctx.holo.G);
  auto f = [&](const Vec& xi) { return psi(xi) * std::conj(kernel(ctx, xi, phi)); };
  return integrate(f, nu, order);
}

cplx pairing_closed(const BargmannContext& ctx, const CoherentSpan& hspan,
                    const CoherentSpan& sspan) {
  return ctx.holo.inner_product(hspan, transform(ctx, sspan));
}

namespace {

cplx pairing_integral(const BargmannContext& ctx, const std::function<cplx(const Vec&)>& f,
                      int order) {
  Mat qS = ctx.ps.q_map.transpose() * ctx.vf.S * ctx.ps.q_map;
  Mat Peff = 0.25 * ctx.holo.G + 0.5 * qS;
  GaussianMeasure eff = make_gaussian(Peff);
  GaussianMeasure muL = make_gaussian(0.5 * ctx.holo.G);
  auto g = [&](const Vec& xi) { return f(xi) * std::exp(xi.dot(Peff * xi)); };
  return (muL.Z / eff.Z) * integrate(g, eff, order);
}

cplx alpha_value(const BargmannContext& ctx, const Vec& xi) {
  return std::exp(cplx(0, 0.5) * ctx.ps.bracket(xi, xi) -
                  0.25 * xi.dot(ctx.holo.G * xi));
}

}  // namespace

cplx pairing_quadrature(const BargmannContext& ctx,
                        const std::function<cplx(const Vec&)>& hpsi,
                        const std::function<cplx(const Vec&)>& spsi, int order) {
  auto f = [&](const Vec& xi) {
    return std::conj(hpsi(xi)) * spsi(ctx.ps.quotient(xi)) * std::conj(alpha_value(ctx, xi));
  };
  return pairing_integral(ctx, f, order);
}

cplx pairing_inverse_quadrature(const BargmannContext& ctx,
                                const std::function<cplx(const Vec&)>& spsi,
                                const std::function<cplx(const Vec&)>& hpsi, int order) {
  auto f = [&](const Vec& xi) {
    return std::conj(spsi(ctx.ps.quotient(xi))) * hpsi(xi) * alpha_value(ctx, xi);
  };
  return pairing_integral(ctx, f, order);
}

}  // namespace geoquant
