#pragma once

#include "geoquant/correspondence.hpp"
#include "geoquant/observables.hpp"
#include "geoquant/phase_space.hpp"

namespace geoquant {

// Periodic scalar field on a one-dimensional spatial lattice.  Coordinates
// are ordered (phi_0 .. phi_{N-1}, pi_0 .. pi_{N-1}); the bracket pairs
// momenta against fields with weight a, so the field sites form the N frame
// and the momentum sites the M frame.
struct LatticeModel {
  int sites = 0;
  double mass = 0.0;
  double spacing = 0.0;
  PhaseSpace ps;
  Mat U;     // orthonormal discrete Fourier modes, sites x sites
  Vec freq;  // mode frequencies sqrt(mass^2 + (2/a sin(pi k/N))^2)
  Mat K;     // U diag(freq) U^T
  ComplexStructure cs;  // [[0, K^{-1}], [-K, 0]]
};

LatticeModel build_lattice(int sites, double mass, double spacing);

// Vacuum form obtained through the block decomposition of the complex
// structure; diag(a K, 0) up to the frame identification.
VacuumForm lattice_vacuum_form(const LatticeModel& model);

// Smeared field and momentum functionals a sum_x f_x phi_x, a sum_x g_x pi_x.
LinearObservable smeared_field(const LatticeModel& model, const Vec& f);
LinearObservable smeared_momentum(const LatticeModel& model, const Vec& g);

// Ground-state covariance <phi_x phi_y> from the vacuum form.
Mat two_point(const LatticeModel& model);

// The same entry as an explicit frequency-mode sum, for cross-checking.
double two_point_mode_sum(const LatticeModel& model, int x, int y);

}  // namespace geoquant
