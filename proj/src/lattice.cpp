#include "geoquant/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace geoquant {

LatticeModel build_lattice(int sites, double mass, double spacing) {
  if (sites < 1) throw std::invalid_argument("lattice: need at least one site");
  if (mass <= 0.0) throw std::invalid_argument("lattice: mass must be positive");
  if (spacing <= 0.0) throw std::invalid_argument("lattice: spacing must be positive");

  const int N = sites;
  const double a = spacing;
  LatticeModel model;
  model.sites = N;
  model.mass = mass;
  model.spacing = a;

  model.freq = Vec(N);
  for (int k = 0; k < N; ++k) {
    double s = 2.0 / a * std::sin(M_PI * k / N);
    model.freq(k) = std::sqrt(mass * mass + s * s);
  }

  // Real Fourier frame: constant mode, cosine/sine pairs at +-k, and the
  // alternating mode when N is even.  Degenerate pairs share a frequency, so
  // column k may carry either member.
  model.U = Mat::Zero(N, N);
  for (int x = 0; x < N; ++x) model.U(x, 0) = 1.0 / std::sqrt(double(N));
  for (int k = 1; 2 * k < N; ++k)
    for (int x = 0; x < N; ++x) {
      model.U(x, k) = std::sqrt(2.0 / N) * std::cos(2.0 * M_PI * k * x / N);
      model.U(x, N - k) = std::sqrt(2.0 / N) * std::sin(2.0 * M_PI * k * x / N);
    }
  if (N % 2 == 0)
    for (int x = 0; x < N; ++x) model.U(x, N / 2) = (x % 2 == 0 ? 1.0 : -1.0) / std::sqrt(double(N));

  model.K = model.U * model.freq.asDiagonal() * model.U.transpose();
  Mat Kinv = model.U * model.freq.cwiseInverse().asDiagonal() * model.U.transpose();

  Mat W = Mat::Zero(2 * N, 2 * N);
  W.topRightCorner(N, N) = -0.5 * a * Mat::Identity(N, N);
  W.bottomLeftCorner(N, N) = 0.5 * a * Mat::Identity(N, N);
  Mat bn = Mat::Zero(2 * N, N), bm = Mat::Zero(2 * N, N);
  bn.topRows(N) = Mat::Identity(N, N);
  bm.bottomRows(N) = Mat::Identity(N, N);
  model.ps = bracket_from_splitting(W, bm, bn);

  Mat J = Mat::Zero(2 * N, 2 * N);
  J.topRightCorner(N, N) = Kinv;
  J.bottomLeftCorner(N, N) = -model.K;
  model.cs = validate_complex_structure(model.ps, J);
  return model;
}

VacuumForm lattice_vacuum_form(const LatticeModel& model) {
  return omega_from_abcd(model.ps, abcd_from_j(model.ps, model.cs));
}

LinearObservable smeared_field(const LatticeModel& model, const Vec& f) {
  if (f.size() != model.sites) throw std::invalid_argument("lattice: smearing size mismatch");
  Vec fvec = Vec::Zero(2 * model.sites);
  fvec.head(model.sites) = model.spacing * f;
  return make_observable(model.ps, fvec);
}

LinearObservable smeared_momentum(const LatticeModel& model, const Vec& g) {
  if (g.size() != model.sites) throw std::invalid_argument("lattice: smearing size mismatch");
  Vec fvec = Vec::Zero(2 * model.sites);
  fvec.tail(model.sites) = model.spacing * g;
  return make_observable(model.ps, fvec);
}

Mat two_point(const LatticeModel& model) {
  VacuumForm vf = lattice_vacuum_form(model);
  return 0.5 * vf.S.inverse();
}

double two_point_mode_sum(const LatticeModel& model, int x, int y) {
  if (x < 0 || x >= model.sites || y < 0 || y >= model.sites)
    throw std::invalid_argument("lattice: site out of range");
  double acc = 0.0;
  for (int k = 0; k < model.sites; ++k) {
    double ux = model.U(x, k) / std::sqrt(model.spacing);
    double uy = model.U(y, k) / std::sqrt(model.spacing);
    acc += ux * uy / (2.0 * model.freq(k));
  }
  return acc;
}

}  // namespace geoquant
