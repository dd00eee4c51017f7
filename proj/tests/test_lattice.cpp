#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "geoquant/lattice.hpp"
#include "geoquant/observables.hpp"
#include "geoquant/random_gen.hpp"
#include "geoquant/span.hpp"
#include "helpers.hpp"

using namespace geoquant;
using namespace geoquant::testing;

TEST_CASE("single site reproduces the oscillator") {
  LatticeModel m = build_lattice(1, 1.0, 1.0);
  CHECK(m.ps.dim == 2);
  CHECK(m.ps.T(1, 0) == doctest::Approx(1.0));
  CHECK(m.ps.T.cwiseAbs().sum() == doctest::Approx(1.0));
  CHECK((m.cs.J - j0()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(m.freq(0) == doctest::Approx(1.0));

  VacuumForm vf = lattice_vacuum_form(m);
  CHECK(vf.S(0, 0) == doctest::Approx(1.0));
  CHECK(vf.A.cwiseAbs().maxCoeff() < 1e-12);

  LatticeModel heavy = build_lattice(1, 2.0, 1.0);
  CHECK(heavy.cs.J(0, 1) == doctest::Approx(0.5));
  CHECK(heavy.cs.J(1, 0) == doctest::Approx(-2.0));
  CHECK(lattice_vacuum_form(heavy).S(0, 0) == doctest::Approx(2.0));
}

TEST_CASE("two sites carry the expected mode frequencies") {
  LatticeModel m = build_lattice(2, 1.0, 1.0);
  Vec f = m.freq;
  std::sort(f.data(), f.data() + f.size());
  CHECK(f(0) == doctest::Approx(1.0));
  CHECK(f(1) == doctest::Approx(std::sqrt(5.0)));

  Eigen::SelfAdjointEigenSolver<Mat> es(lattice_vacuum_form(m).S);
  CHECK(es.eigenvalues()(0) == doctest::Approx(1.0));
  CHECK(es.eigenvalues()(1) == doctest::Approx(std::sqrt(5.0)));

  CHECK((m.U.transpose() * m.U - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("vacuum form matches the structure correspondence") {
  Rng rng(5);
  for (int t = 0; t < 8; ++t) {
    int sites = 1 + static_cast<int>(rng() % 8);
    double mass = 0.5 + 1.5 * (static_cast<double>(rng() % 1000) / 1000.0);
    double spacing = 0.5 + 1.5 * (static_cast<double>(rng() % 1000) / 1000.0);
    LatticeModel m = build_lattice(sites, mass, spacing);
    VacuumForm direct = lattice_vacuum_form(m);
    VacuumForm viaj = omega_from_j(m.ps, m.cs);
    CHECK((direct.S - viaj.S).cwiseAbs().maxCoeff() <
          1e-10 * (1.0 + direct.S.cwiseAbs().maxCoeff()));
    CHECK((direct.A - viaj.A).cwiseAbs().maxCoeff() < 1e-10);

    Mat tp = two_point(m);
    double worst = 0.0;
    for (int x = 0; x < sites; ++x)
      for (int y = 0; y < sites; ++y)
        worst = std::max(worst, std::abs(tp(x, y) - two_point_mode_sum(m, x, y)));
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("smeared fields and momenta satisfy the canonical relations") {
  LatticeModel m1 = build_lattice(1, 1.0, 1.0);
  LinearObservable f1 = smeared_field(m1, Vec::Constant(1, 1.0));
  LinearObservable g1 = smeared_momentum(m1, Vec::Constant(1, 1.0));
  CHECK(std::abs(expected_commutator(m1.ps, f1, g1) - cplx(0, 1)) < 1e-12);

  Rng rng(9);
  LatticeModel m = build_lattice(3, 0.7, 1.3);
  Vec f = random_vec(rng, 3), g = random_vec(rng, 3);
  cplx expect(0, m.spacing * f.dot(g));
  CHECK(std::abs(expected_commutator(m.ps, smeared_field(m, f),
                                     smeared_momentum(m, g)) - expect) < 1e-10);
  CHECK(std::abs(expected_commutator(m.ps, smeared_field(m, f),
                                     smeared_field(m, g))) < 1e-12);

  SpanSpace full = make_schrodinger_space(m.ps, lattice_vacuum_form(m), false);
  CommutatorDefect cd = commutator_defect(full, smeared_field(m, f),
                                          smeared_momentum(m, g),
                                          random_span(rng, full, 2, 1));
  CHECK(std::abs(cd.constant - expect) < 1e-10 * (1.0 + std::abs(expect)));
  CHECK(cd.defect < 1e-10);
}

TEST_CASE("invalid lattice parameters are rejected") {
  CHECK_THROWS_AS(build_lattice(0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_lattice(4, -1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_lattice(4, 1.0, 0.0), std::invalid_argument);
}
