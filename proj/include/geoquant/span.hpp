#pragma once

#include <vector>

#include "geoquant/correspondence.hpp"
#include "geoquant/polynomial.hpp"

namespace geoquant {

// Wave-function representations a span can live in.  Schrodinger flavors are
// functions of configuration coordinates (basis_n frame); holomorphic flavors
// are functions on phase space with polynomial parts expressed in the complex
// coordinates z.  Affine flavors use displacements from the anchor as labels
// and arguments.
enum class Rep {
  SchrodingerFull,
  SchrodingerReduced,
  Holomorphic,
  AffineHolomorphic,
  AffineSchrodingerFull,
  AffineSchrodingerReduced,
};

// One term: coeff * poly(vars) * core_label.  The label is a phase-space
// vector (for affine representations, a displacement from the anchor).
struct SpanTerm {
  cplx coeff;
  Vec label;
  Polynomial poly;
};

struct CoherentSpan {
  Rep rep;
  std::vector<SpanTerm> terms;
};

// Core exponent data: core(x) = exp(c + l.x + x^T Theta x), with Theta fixed
// by the representation.
struct CoreExponent {
  cplx c;
  CVec l;
};

// A representation context: fixes the measure, the core family and the
// polynomial coordinates, and provides evaluation plus the closed-form inner
// product (complete-the-square Gaussian overlap times Wick moments).
class SpanSpace {
 public:
  Rep rep;
  PhaseSpace ps;
  VacuumForm vf;     // vacuum form on Q, basis_n frame
  Mat G;             // metric on L induced by the vacuum form
  Mat jmat;          // section j: Q -> L (dim x n)
  Vec theta0;        // affine representations; zero otherwise
  Vec base;          // base point of the affine reduced representation
  int ivars = 0;     // integration variables (n or dim)
  int pvars = 0;     // polynomial variables (always n)
  CMat theta_quad;   // representation-fixed quadratic of the core exponent
  Mat prec;          // combined Gaussian precision of pairings, SPD
  CMat zmat;         // holomorphic coordinates, pvars x dim (holo flavors)

  CoreExponent core(const Vec& label) const;

  // Polynomial variables at an argument point.
  CVec poly_vars(const Vec& x) const;

  cplx evaluate(const CoherentSpan& s, const Vec& x) const;
  cplx inner_product(const CoherentSpan& a, const CoherentSpan& b) const;
  double norm(const CoherentSpan& s) const;

  // g(tau, tau') through the stored metric.
  double label_metric(const Vec& tau, const Vec& tau2) const;

  // Rewrites the complex-linear functional w.x on phase space as a form in
  // the z coordinates; throws if the anti-holomorphic residual exceeds tol.
  CVec holomorphic_form(const CVec& w, double tol = 1e-8) const;

  // Affine polynomials over the integration variables realizing the
  // polynomial coordinates and their conjugates (identity for Schrodinger).
  const std::vector<Polynomial>& z_polys() const { return z_polys_; }
  const std::vector<Polynomial>& zbar_polys() const { return zbar_polys_; }

  void finalize();  // fills caches; called by the factory functions

 private:
  std::vector<Polynomial> z_polys_, zbar_polys_;
  Eigen::LLT<Mat> prec_llt_;
  CMat pair_cov_;  // covariance (2 prec)^{-1} of the pairing Gaussian
};

SpanSpace make_schrodinger_space(const PhaseSpace& ps, const VacuumForm& vf, bool reduced);
SpanSpace make_holomorphic_space(const PhaseSpace& ps, const ComplexStructure& cs);

// Span helpers.
CoherentSpan coherent_span(const SpanSpace& space, const Vec& label, cplx coeff = 1.0);
CoherentSpan span_add(const CoherentSpan& a, const CoherentSpan& b);
CoherentSpan span_scale(const CoherentSpan& a, cplx s);
CoherentSpan span_sub(const CoherentSpan& a, const CoherentSpan& b);

// Merges terms whose labels coincide (coefficients folded into the
// polynomial parts) and drops exact-zero terms.
CoherentSpan span_compact(const CoherentSpan& s);

// Gram matrix of a family of spans.
CMat gram(const SpanSpace& space, const std::vector<CoherentSpan>& family);

// Section j reconstructed from the vacuum form alone: j = n - m P^{-T} A.
Mat j_from_vacuum(const PhaseSpace& ps, const VacuumForm& vf);

// Metric on L reconstructed from the vacuum form alone.
Mat metric_from_vacuum(const PhaseSpace& ps, const VacuumForm& vf);

}  // namespace geoquant
