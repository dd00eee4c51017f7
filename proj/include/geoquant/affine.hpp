#pragma once

#include <functional>

#include "geoquant/gaussian.hpp"
#include "geoquant/observables.hpp"
#include "geoquant/span.hpp"

namespace geoquant {

// Phase space acting on itself by translations, twisted by the cocycle
// theta(eta, tau) = theta0 . tau + [eta, tau] with eta relative to the anchor.
struct AffineSpace {
  PhaseSpace ps;
  Vec theta0;
};

AffineSpace make_affine_space(const PhaseSpace& ps, const Vec& theta0);

double theta(const AffineSpace& aff, const Vec& eta, const Vec& tau);

// Representation spaces: holomorphic sections over displacement labels, and
// full / base-relative reduced Schrodinger flavors over configuration space.
SpanSpace make_affine_holomorphic_space(const AffineSpace& aff, const ComplexStructure& cs);
SpanSpace make_affine_schrodinger_space(const AffineSpace& aff, const VacuumForm& vf,
                                        bool reduced, const Vec& base);

struct AffineContext {
  AffineSpace aff;
  ComplexStructure cs;
  VacuumForm vf;
  SpanSpace holo;  // AffineHolomorphic over mu_A
  SpanSpace full;  // AffineSchrodingerFull over mu_C
};

AffineContext make_affine_context(const AffineSpace& aff, const ComplexStructure& cs);

// Pointwise coherent evaluators, written from the defining exponents rather
// than through the span engine so they can serve as independent checks.
cplx affine_coherent_h(const AffineSpace& aff, const Mat& G, const Vec& eta, const Vec& zeta);
cplx affine_coherent_s(const AffineSpace& aff, const VacuumForm& vf, const Vec& zeta,
                       const Vec& phi);

// Multiplier relating the eta-based and eta2-based reduced descriptions of
// one state; phi is the configuration offset from the eta2 base point.
cplx base_change_factor(const AffineSpace& aff, const VacuumForm& vf, const Vec& eta,
                        const Vec& eta2, const Vec& phi);

// Rewrites a reduced span over space.base as a span over new_base (labels and
// coefficients unchanged, polynomial arguments shifted).
CoherentSpan rebase_state(const SpanSpace& space, const CoherentSpan& s, const Vec& new_base);

// Conversions between the reduced flavor (over the space base) and the full
// flavor; exact, polynomial argument shifts only.
CoherentSpan affine_reduced_to_full(const SpanSpace& reduced_space, const CoherentSpan& s);
CoherentSpan affine_full_to_reduced(const AffineContext& ctx, const CoherentSpan& s,
                                    const Vec& base);

// Closed-form transform between the full Schrodinger and holomorphic affine
// flavors, exact on polynomial prefactors.
CoherentSpan transform_affine(const AffineContext& ctx, const CoherentSpan& s);
CoherentSpan transform_affine_inverse(const AffineContext& ctx, const CoherentSpan& s);

// Quadrature oracles for the defining integrals.
cplx transform_affine_quadrature(const AffineContext& ctx,
                                 const std::function<cplx(const Vec&)>& psi, const Vec& zeta,
                                 int order);
cplx transform_affine_inverse_quadrature(const AffineContext& ctx,
                                         const std::function<cplx(const Vec&)>& psi,
                                         const Vec& phi, int order);

// Pairing <eta_h, transform psi_s> in closed form and by quadrature.
cplx pairing_affine_closed(const AffineContext& ctx, const CoherentSpan& hspan,
                           const CoherentSpan& sspan);
cplx pairing_affine_quadrature(const AffineContext& ctx,
                               const std::function<cplx(const Vec&)>& hpsi,
                               const std::function<cplx(const Vec&)>& spsi, int order);

// Affine functional F(zeta) = constant + f . zeta with Hamiltonian field X.
struct AffineObservable {
  double constant = 0.0;
  Vec f;
  Vec X;
};

AffineObservable make_affine_observable(const PhaseSpace& ps, double constant, const Vec& f);

// Quantized action in the space's affine representation.
CoherentSpan apply_affine_observable(const SpanSpace& space, const AffineObservable& F,
                                     const CoherentSpan& s);

}  // namespace geoquant
