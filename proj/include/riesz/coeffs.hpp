#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "riesz/types.hpp"

namespace riesz::coeffs {

/// alpha_n(s) = pi^{2n} * sum_j q[j] s^j, exact rationals.
struct AlphaPolynomial {
  int n = 0;
  std::vector<Rational> q;   // degree n, q[0] == 0 for n >= 1
  std::vector<double> q_dbl; // cached double images of q

  Complex eval(Complex s) const;           // includes the pi^{2n} factor
  Rational eval_exact(const Rational& s) const;  // rational part only
  nlohmann::json to_json() const;
};

/// Table of alpha polynomials built by integrating
/// alpha_n'(s) = sum_{m<n} alpha_m(s) zeta(2(n-m)) / (n-m) with alpha_n(0)=0.
class AlphaTable {
 public:
  explicit AlphaTable(int n_max);

  int capacity() const { return (int)polys_.size() - 1; }
  const AlphaPolynomial& poly(int n) const;

 private:
  std::vector<AlphaPolynomial> polys_;
};

const AlphaTable& alpha_table();

Complex alpha_eval(int n, Complex s);

/// alpha_M'(2M+1) as an exact rational times pi^{2M}.
RationalPi alpha_derivative_at_odd(int m);

/// alpha_M(2M+1) as an exact rational times pi^{2M}.
RationalPi alpha_at_odd(int m);

/// Max relative discrepancy between the recurrence table and the
/// generalized-Bernoulli route alpha_n(s) = (-1)^n B_{2n}^{(s)}(s/2) (2pi)^{2n}/(2n)!.
double generalized_bernoulli_check(int n_max, Complex s);

struct ExpansionCoefficient {
  int n = 0;
  Complex value;
  std::optional<int> sign_hint;  // sign of zeta(s-2n) for real s > 0
};

/// c_n(s) = 2/(2pi)^s alpha_n(s) zeta(s-2n); exact zero at the trivial zeros.
ExpansionCoefficient c_coefficient(int n, Complex s);

/// |c_n(s) N^{-2n}| for n = 0..n_max, cancellation-free via the
/// functional-equation form; requires extended precision.
std::vector<double> divergence_profile(double s, long n_points, int n_max,
                                       const PrecisionConfig& cfg);

}  // namespace riesz::coeffs
