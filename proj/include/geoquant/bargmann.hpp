#pragma once

#include <functional>

#include "geoquant/gaussian.hpp"
#include "geoquant/span.hpp"

namespace geoquant {

// Bundles the three representation contexts tied to one (phase space,
// complex structure) pair, with the vacuum form induced by the structure.
struct BargmannContext {
  PhaseSpace ps;
  ComplexStructure cs;
  VacuumForm vf;
  SpanSpace full;     // SchrodingerFull over mu_Q
  SpanSpace reduced;  // SchrodingerReduced over nu_Q
  SpanSpace holo;     // Holomorphic over nu_L
};

BargmannContext make_bargmann(const PhaseSpace& ps, const ComplexStructure& cs);

// Integral kernel B(xi, phi) = exp({j(phi),xi} - i/2 [j(phi),j(phi)]
// - 1/2 g(j(phi),j(phi)) + 1/4 g(xi,xi) - 1/2 {j(q(xi)),xi}); holomorphic in
// xi, and conj(B(tau, phi)) is the full coherent wave function at phi.
cplx kernel(const BargmannContext& ctx, const Vec& xi, const Vec& phi);

// Kernel in adapted coordinates: exp(sqrt(2) q.z - 1/2 q.q - 1/2 z.z).
cplx coordinate_kernel(int n, const CVec& z, const Vec& q);

// Adapted coordinates for the comparison with coordinate_kernel; both throw
// unless N = J M (the frames are otherwise unrelated).
CVec z_coords(const BargmannContext& ctx, const Vec& xi);
Vec q_coords(const BargmannContext& ctx, const Vec& phi);

// Closed-form transform of a Schrodinger span (full or reduced flavor) to a
// holomorphic span; label-wise on coherent states, exact on polynomial
// prefactors via Gaussian moment transport.
CoherentSpan transform(const BargmannContext& ctx, const CoherentSpan& s);

// Closed-form inverse onto the requested Schrodinger flavor.
CoherentSpan transform_inverse(const BargmannContext& ctx, const CoherentSpan& s, Rep target);

// Quadrature oracles for the defining integrals.
cplx transform_quadrature(const BargmannContext& ctx,
                          const std::function<cplx(const Vec&)>& psi, const Vec& xi,
                          int order);
cplx transform_inverse_quadrature(const BargmannContext& ctx,
                                  const std::function<cplx(const Vec&)>& psi, const Vec& phi,
                                  int order);

// Pairing <psi_h, B psi_s> in closed form and by quadrature, plus the
// conjugate-direction quadrature <psi_s, B^{-1} psi_h>.
cplx pairing_closed(const BargmannContext& ctx, const CoherentSpan& hspan,
                    const CoherentSpan& sspan);
cplx pairing_quadrature(const BargmannContext& ctx,
                        const std::function<cplx(const Vec&)>& hpsi,
                        const std::function<cplx(const Vec&)>& spsi, int order);
cplx pairing_inverse_quadrature(const BargmannContext& ctx,
                                const std::function<cplx(const Vec&)>& spsi,
                                const std::function<cplx(const Vec&)>& hpsi, int order);

}  // namespace geoquant
