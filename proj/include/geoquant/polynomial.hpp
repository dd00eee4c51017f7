#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "geoquant/phase_space.hpp"

namespace geoquant {

using MultiIndex = std::vector<std::uint8_t>;

// Sparse multivariate polynomial with complex coefficients over a fixed
// number of variables.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, cplx c);
  static Polynomial variable(int nvars, int k);
  // Affine form c + sum_k lin[k] x_k.
  static Polynomial affine(int nvars, cplx c, const CVec& lin);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  const std::map<MultiIndex, cplx>& terms() const { return terms_; }

  void add_term(const MultiIndex& mi, cplx c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(cplx s) const;
  Polynomial& operator+=(const Polynomial& o);

  // Coefficient-wise conjugate; equals pointwise conjugation at real
  // arguments.
  Polynomial conj_coeffs() const;

  Polynomial derivative(int k) const;

  cplx eval(const CVec& x) const;

  // Composition p(args[0], ..., args[nvars-1]); all args share a variable
  // count, which becomes the variable count of the result.
  Polynomial substitute(const std::vector<Polynomial>& args) const;

  // Largest coefficient magnitude, used for relative comparisons.
  double max_abs_coeff() const;

  // Drops coefficients below eps (absolute).
  Polynomial pruned(double eps) const;

 private:
  int nvars_ = 0;
  std::map<MultiIndex, cplx> terms_;
};

// Exact moment of a centered Gaussian with covariance matrix cov (complex
// symmetric is allowed): E[x^mi] via the Wick pairing recursion, memoized.
class WickMoments {
 public:
  explicit WickMoments(CMat cov) : cov_(std::move(cov)) {}
  cplx moment(const MultiIndex& mi);

 private:
  CMat cov_;
  std::map<MultiIndex, cplx> memo_;
};

// E[p(u + mean(y))] for centered Gaussian u with covariance cov.  mean[k] is
// a polynomial in the output variables; the result is a polynomial over
// out_nvars variables (a constant when out_nvars = 0).
Polynomial gaussian_shifted_expectation(const Polynomial& p,
                                        const std::vector<Polynomial>& mean,
                                        const CMat& cov, int out_nvars);

}  // namespace geoquant
