#pragma once

#include <cstdint>
#include <vector>

#include "geoquant/report.hpp"

namespace geoquant {

// Property suites shared by the CLI and the acceptance runner.  Each returns
// a report whose tolerance is the pinned bound for that property.

// Structure -> form -> structure and form -> structure -> form round trips on
// random instances; dim 0 sweeps even dimensions up to 16.
CheckReport check_roundtrip(std::uint64_t seed, int trials = 100, int dim = 0);

// Square, form compatibility and metric positivity of every recovered
// structure.
CheckReport check_structure_invariants(std::uint64_t seed, int trials = 100);

// Transform isometry: closed form on random spans, plus quadrature oracle
// agreement in one and two configuration dimensions.
CheckReport check_isometry(std::uint64_t seed);

// Kernel against its closed coordinate form on the one-dimensional standard
// instance.
CheckReport check_coordinate_kernel(std::uint64_t seed);

// Reproducing property of holomorphic coherent states and unit norm of the
// normalized family.
CheckReport check_reproducing(std::uint64_t seed);

// Closed-form pairings against their defining integrals, both directions.
CheckReport check_pairing(std::uint64_t seed);

// Commutator constants against -2i omega(X_F, X_G) in all representations,
// including the canonical pair on the one-dimensional instance.
CheckReport check_ccr(std::uint64_t seed);

// Transform intertwines the quantized observable actions.
CheckReport check_intertwine(std::uint64_t seed, int trials = 50);

// Exponentiated creation series on the vacuum against the coherent state it
// converges to.
CheckReport check_exp_creation(std::uint64_t seed);

// Base-change isometry, transform isometry, observable intertwining, and the
// reduction to the linear theory at vanishing cocycle.
std::vector<CheckReport> affine_suite_parts(std::uint64_t seed);
CheckReport check_affine_suite(std::uint64_t seed);

// Lattice vacuum form against the structure-derived form, and the two-point
// function against the mode sum.
CheckReport check_lattice_vacuum(std::uint64_t seed);

// Residual monotonicity of the coherent-family projection demo.
CheckReport check_density_probe();

std::vector<CheckReport> all_checks(std::uint64_t seed);

}  // namespace geoquant
