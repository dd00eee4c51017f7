#pragma once

#include <cstdint>
#include <random>

#include "geoquant/correspondence.hpp"
#include "geoquant/phase_space.hpp"
#include "geoquant/span.hpp"

namespace geoquant {

using Rng = std::mt19937_64;

Vec random_vec(Rng& rng, int size, double scale = 1.0);

// Form-preserving map exp(W^{-1} Sym) for a random symmetric generator.
Mat random_symplectic(Rng& rng, const Mat& W, double scale = 0.3);

// The structure -W (-W^2)^{-1/2} canonically attached to the form.
ComplexStructure standard_structure(const PhaseSpace& ps);

// Conjugate of the standard structure by a random form-preserving map.
ComplexStructure random_structure(Rng& rng, const PhaseSpace& ps, double scale = 0.3);

// Conjugate of the block bracket [[0,0],[I,0]] by a well-conditioned random
// change of frame.
PhaseSpace random_phase_space(Rng& rng, int dim);

// Random positive S and symmetric A of size n.
VacuumForm random_vacuum_form(Rng& rng, int n, double spread = 0.4);

Polynomial random_polynomial(Rng& rng, int nvars, int degree, int nterms);

CoherentSpan random_span(Rng& rng, const SpanSpace& space, int nstates, int degree);

}  // namespace geoquant
