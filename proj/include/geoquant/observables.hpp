#pragma once

#include <utility>

#include "geoquant/bargmann.hpp"
#include "geoquant/span.hpp"

namespace geoquant {

// Linear functional F(xi) = f . xi together with its Hamiltonian vector
// field, the unique X with 2 omega(., X) = F.
struct LinearObservable {
  Vec f;
  Vec X;
};

Vec hamiltonian_vector(const PhaseSpace& ps, const Vec& f);
LinearObservable make_observable(const PhaseSpace& ps, const Vec& f);

// Splits f into holomorphic / antiholomorphic parts f_pm = (f -+ i J^T f)/2,
// so that F = F+ + F- with F+ complex linear for the structure.
std::pair<CVec, CVec> split_pm(const ComplexStructure& cs, const Vec& f);

// Quantized action of F on a span in the space's representation (full or
// reduced Schrodinger, or holomorphic): multiplication part plus -i times
// the directional derivative along the Hamiltonian field.
CoherentSpan apply_observable(const SpanSpace& space, const LinearObservable& F,
                              const CoherentSpan& s);

// Termwise (mult + dcoef * D_v) where the derivative acts on polynomial
// times core: dvec is the direction pushed to polynomial variables, and the
// core contributes l . v plus (2 Theta v) . x.
CoherentSpan apply_multiplier_derivative(const SpanSpace& space, const Polynomial& mult,
                                         const CVec& v, const CVec& dvec, cplx dcoef,
                                         const CoherentSpan& s);

// Commutator constant [F, G] = -2i omega(X_F, X_G).
cplx expected_commutator(const PhaseSpace& ps, const LinearObservable& F,
                         const LinearObservable& G);

struct CommutatorDefect {
  cplx constant;  // Rayleigh quotient <psi, C psi> / <psi, psi>
  double defect;  // |C psi - constant psi| / |psi|
};
CommutatorDefect commutator_defect(const SpanSpace& space, const LinearObservable& F,
                                   const LinearObservable& G, const CoherentSpan& s);

struct CreationResult {
  CoherentSpan series;  // truncated exp of the creation part applied to the vacuum
  Vec label;            // coherent label the series converges to, -J X_F
  int cap;              // retained polynomial degree
  double tail_bound;    // norm bound on the dropped tail
};
CreationResult exp_creation_on_vacuum(const SpanSpace& holo, const ComplexStructure& cs,
                                      const LinearObservable& F, int cap = 8);

// Relative norm of (transform o F) - (F o transform) applied to a
// Schrodinger span, measured in the holomorphic space.
double intertwine_defect(const BargmannContext& ctx, const LinearObservable& F,
                         const CoherentSpan& s);

}  // namespace geoquant
