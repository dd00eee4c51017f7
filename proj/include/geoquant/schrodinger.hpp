#pragma once

#include "geoquant/span.hpp"

namespace geoquant {

// K_0(phi) = exp(-1/2 Omega(phi, phi)).
cplx vacuum_wavefunction(const VacuumForm& vf, const Vec& phi);

enum class SchrodingerKind { Full, Reduced };

// Full: K_tau = exp(g(tau,tau)/4) k_tau K_0.  Reduced:
// k_tau(phi) = exp(Omega(q(tau),phi) + i[tau,phi] - 1/2 Omega(q(tau),q(tau))
//              - i/2 [tau,tau]).
cplx coherent_wavefunction(const PhaseSpace& ps, const VacuumForm& vf, const Vec& tau,
                           SchrodingerKind kind, const Vec& phi);

// Reduced coherent wave function parametrized by a configuration sigma and a
// Q-covector lambda; the label is tau = i_N(sigma) + lambda_M with lambda_M
// the M-vector pairing to lambda.
cplx coherent_from_sigma_lambda(const PhaseSpace& ps, const VacuumForm& vf, const Vec& sigma,
                                const Vec& lambda, const Vec& phi);

// Label carrying the same (sigma, lambda) parametrization.
Vec label_from_sigma_lambda(const PhaseSpace& ps, const Vec& sigma, const Vec& lambda);

// Deterministic label grid used by the density probe.
std::vector<Vec> density_grid(const PhaseSpace& ps, int count);

struct DensityProbeResult {
  std::vector<double> residuals;  // residuals[j]: distance using j grid states
  bool regularized = false;       // Gram ridge applied
};

// Least-squares distance from the target to the span of the first k grid
// coherent states, for every prefix size 0..k.
DensityProbeResult density_probe(const SpanSpace& space, const CoherentSpan& target, int k);

}  // namespace geoquant
