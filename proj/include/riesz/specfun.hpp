#pragma once

#include <vector>

#include "riesz/types.hpp"

namespace riesz::specfun {

/// Exact Bernoulli numbers B_0..B_{2K+1} and the coefficient rows of the
/// Bernoulli polynomials B_n(x) up to degree 2K+1.
class BernoulliTable {
 public:
  explicit BernoulliTable(int even_capacity);

  int even_capacity() const { return even_capacity_; }
  int max_index() const { return even_capacity_ + 1; }

  const Rational& number(int k) const;
  // Row n holds the coefficients of B_n(x) in increasing powers of x.
  const std::vector<Rational>& poly_row(int n) const;
  Rational poly_exact(int n, const Rational& x) const;
  double poly(int n, double x) const;

 private:
  int even_capacity_;
  std::vector<Rational> numbers_;
  std::vector<std::vector<Rational>> rows_;
};

/// Shared table, built once (capacity from default_config()).
const BernoulliTable& bernoulli_table();

Rational bernoulli_number(int k);
double bernoulli_poly(int n, double x);

/// B_n at the fractional part of x.
double periodic_bernoulli(int n, double x);

Complex pochhammer(Complex a, int m);

/// Lanczos approximation with reflection for Re z < 1/2.
Complex gamma(Complex z);

double digamma(double x);

/// Riemann zeta by Euler-Maclaurin continuation; exact 0 at the trivial
/// zeros and the exact rational*pi^{2m} path at positive even integers.
Complex zeta(Complex s);
Complex zeta_euler_maclaurin(Complex s, int partial_terms, int bernoulli_terms);

/// zeta(2m) as an exact rational times pi^{2m}.
RationalPi zeta_even(int m);

bool is_trivial_zero(Complex s);

Rational binomial(int n, int k);
Rational factorial(int n);

}  // namespace riesz::specfun
