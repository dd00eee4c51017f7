#include "geoquant/polynomial.hpp"

#include <stdexcept>

namespace geoquant {

namespace {
constexpr double kDropTol = 1e-300;
}

Polynomial Polynomial::constant(int nvars, cplx c) {
  Polynomial p(nvars);
  p.add_term(MultiIndex(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int k) {
  Polynomial p(nvars);
  MultiIndex mi(nvars, 0);
  mi[k] = 1;
  p.add_term(mi, 1.0);
  return p;
}

Polynomial Polynomial::affine(int nvars, cplx c, const CVec& lin) {
  Polynomial p = constant(nvars, c);
  for (int k = 0; k < nvars; ++k) {
    if (lin(k) != 0.0) {
      MultiIndex mi(nvars, 0);
      mi[k] = 1;
      p.add_term(mi, lin(k));
    }
  }
  return p;
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [mi, c] : terms_) {
    int t = 0;
    for (auto e : mi) t += e;
    d = std::max(d, t);
  }
  return d;
}

void Polynomial::add_term(const MultiIndex& mi, cplx c) {
  if (static_cast<int>(mi.size()) != nvars_)
    throw std::invalid_argument("polynomial: multi-index size mismatch");
  auto it = terms_.find(mi);
  if (it == terms_.end()) {
    if (std::abs(c) > kDropTol) terms_.emplace(mi, c);
  } else {
    it->second += c;
    if (std::abs(it->second) <= kDropTol) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial: variable count mismatch");
  for (const auto& [mi, c] : o.terms_) add_term(mi, c);
  return *this;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * cplx(-1.0); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial: variable count mismatch");
  Polynomial r(nvars_);
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      MultiIndex mi(nvars_);
      for (int k = 0; k < nvars_; ++k) mi[k] = static_cast<std::uint8_t>(a[k] + b[k]);
      r.add_term(mi, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::operator*(cplx s) const {
  Polynomial r(nvars_);
  if (s == 0.0) return r;
  for (const auto& [mi, c] : terms_) r.add_term(mi, c * s);
  return r;
}

Polynomial Polynomial::conj_coeffs() const {
  Polynomial r(nvars_);
  for (const auto& [mi, c] : terms_) r.add_term(mi, std::conj(c));
  return r;
}

Polynomial Polynomial::derivative(int k) const {
  Polynomial r(nvars_);
  for (const auto& [mi, c] : terms_) {
    if (mi[k] == 0) continue;
    MultiIndex d = mi;
    d[k] -= 1;
    r.add_term(d, c * double(mi[k]));
  }
  return r;
}

cplx Polynomial::eval(const CVec& x) const {
  if (x.size() != nvars_) throw std::invalid_argument("polynomial: evaluation size mismatch");
  cplx acc = 0.0;
  for (const auto& [mi, c] : terms_) {
    cplx t = c;
    for (int k = 0; k < nvars_; ++k)
      for (int e = 0; e < mi[k]; ++e) t *= x(k);
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& args) const {
  if (static_cast<int>(args.size()) != nvars_)
    throw std::invalid_argument("polynomial: substitution arity mismatch");
  int out_vars = nvars_ == 0 ? 0 : args[0].nvars();
  for (const auto& a : args)
    if (a.nvars() != out_vars) throw std::invalid_argument("polynomial: substitution args disagree");

  // Power cache per variable, filled on demand.
  std::vector<std::vector<Polynomial>> powers(nvars_);
  auto power = [&](int k, int e) -> const Polynomial& {
    auto& cache = powers[k];
    if (cache.empty()) cache.push_back(Polynomial::constant(out_vars, 1.0));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * args[k]);
    return cache[e];
  };

  Polynomial r(out_vars);
  for (const auto& [mi, c] : terms_) {
    Polynomial t = Polynomial::constant(out_vars, c);
    for (int k = 0; k < nvars_; ++k)
      if (mi[k] > 0) t = t * power(k, mi[k]);
    r += t;
  }
  return r;
}

double Polynomial::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [mi, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

Polynomial Polynomial::pruned(double eps) const {
  Polynomial r(nvars_);
  for (const auto& [mi, c] : terms_)
    if (std::abs(c) > eps) r.add_term(mi, c);
  return r;
}

cplx WickMoments::moment(const MultiIndex& mi) {
  int total = 0;
  for (auto e : mi) total += e;
  if (total == 0) return 1.0;
  if (total % 2 != 0) return 0.0;
  auto it = memo_.find(mi);
  if (it != memo_.end()) return it->second;

  // Pair the first remaining factor with each other factor in turn.
  int first = 0;
  while (mi[first] == 0) ++first;
  MultiIndex base = mi;
  base[first] -= 1;
  cplx acc = 0.0;
  for (int j = 0; j < static_cast<int>(mi.size()); ++j) {
    if (base[j] == 0) continue;
    MultiIndex rest = base;
    rest[j] -= 1;
    acc += double(base[j]) * cov_(first, j) * moment(rest);
  }
  memo_.emplace(mi, acc);
  return acc;
}

Polynomial gaussian_shifted_expectation(const Polynomial& p,
                                        const std::vector<Polynomial>& mean,
                                        const CMat& cov, int out_nvars) {
  const int d = p.nvars();
  if (static_cast<int>(mean.size()) != d)
    throw std::invalid_argument("shifted expectation: mean arity mismatch");

  // Joint variables: u_0..u_{d-1}, then the output variables.
  std::vector<Polynomial> args;
  args.reserve(d);
  for (int k = 0; k < d; ++k) {
    Polynomial a = Polynomial::variable(d + out_nvars, k);
    for (const auto& [mi, c] : mean[k].terms()) {
      MultiIndex lifted(d + out_nvars, 0);
      for (int j = 0; j < out_nvars; ++j) lifted[d + j] = mi[j];
      a.add_term(lifted, c);
    }
    args.push_back(a);
  }
  Polynomial joint = p.substitute(args);

  WickMoments wick(cov);
  Polynomial r(out_nvars);
  for (const auto& [mi, c] : joint.terms()) {
    MultiIndex ui(mi.begin(), mi.begin() + d);
    MultiIndex yi(mi.begin() + d, mi.end());
    cplx m = wick.moment(ui);
    if (m != 0.0) r.add_term(yi, c * m);
  }
  return r;
}

}  // namespace geoquant
