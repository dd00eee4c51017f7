#pragma once

#include "geoquant/span.hpp"

namespace geoquant {

enum class HolomorphicKind { Standard, Normalized };

// Standard: K_tau(xi) = exp(1/2 {tau, xi}).  Normalized version carries the
// extra factor exp(-g(tau,tau)/4).
cplx coherent_h(const PhaseSpace& ps, const ComplexStructure& cs, const Vec& tau,
                HolomorphicKind kind, const Vec& xi);

// Reproducing pairing <K_tau, psi>; throws if it disagrees with the pointwise
// evaluation psi(tau) beyond tol.
cplx reproduce(const SpanSpace& space, const CoherentSpan& psi, const Vec& tau,
               double tol = 1e-10);

// alpha(xi) = exp(i/2 [xi,xi] - 1/4 g(xi,xi)).
cplx alpha_fn(const PhaseSpace& ps, const ComplexStructure& cs, const Vec& xi);

// Kahler potential K(xi) = 1/2 g(xi,xi).
double kahler_potential(const PhaseSpace& ps, const ComplexStructure& cs, const Vec& xi);

// Adapted symplectic potential Theta(tau, xi) = -i/2 {tau, xi}.
cplx theta_adapted(const PhaseSpace& ps, const ComplexStructure& cs, const Vec& tau,
                   const Vec& xi);

}  // namespace geoquant
