#include "riesz/highprec.hpp"

#include <boost/math/constants/constants.hpp>

#include "riesz/coeffs.hpp"
#include "riesz/specfun.hpp"

namespace riesz::hp {

namespace {

constexpr int kZetaPartialTerms = 64;
constexpr int kZetaBernoulliTerms = 30;
constexpr int kVsSeriesTerms = 64;

Real rational_to_real(const Rational& q) { return q.convert_to<Real>(); }

Real pi_power(int k) {
  Real p = 1;
  for (int i = 0; i < k; ++i) p *= pi();
  return p;
}

HComplex cpow(const HComplex& base_log_arg, const HComplex& expo) {
  return exp(expo * base_log_arg);
}

}  // namespace

Real pi() { return boost::math::constants::pi<Real>(); }

Real euler_gamma() { return boost::math::constants::euler<Real>(); }

HComplex pochhammer(const HComplex& a, int m) {
  HComplex prod(1);
  for (int i = 0; i < m; ++i) prod *= a + Real(i);
  return prod;
}

HComplex zeta(const HComplex& s) {
  if (s == HComplex(1)) throw PoleError("zeta pole at s = 1");
  if (s.imag() == 0 && s.real() < 0) {
    const Real r = -s.real();
    if (floor(r) == r && fmod(r, Real(2)) == 0) return HComplex(0);
  }
  HComplex sum(0);
  const int m = kZetaPartialTerms;
  for (int k = 1; k < m; ++k) sum += exp(-s * log(Real(k)));
  const Real log_m = log(Real(m));
  sum += exp((HComplex(1) - s) * log_m) / (s - Real(1));
  sum += Real(0.5) * exp(-s * log_m);
  for (int k = 1; k <= kZetaBernoulliTerms; ++k) {
    const Real coeff = rational_to_real(specfun::bernoulli_number(2 * k) /
                                        specfun::factorial(2 * k));
    sum += coeff * pochhammer(s, 2 * k - 1) *
           exp(-(s + Real(2 * k - 1)) * log_m);
  }
  return sum;
}

HComplex alpha_eval(int n, const HComplex& s) {
  const auto& poly = coeffs::alpha_table().poly(n);
  HComplex acc(0);
  for (int j = n; j >= 0; --j) acc = acc * s + rational_to_real(poly.q[j]);
  return acc * pi_power(2 * n);
}

HComplex v_s_series(const HComplex& s, int n_max) {
  HComplex sum(0);
  Real quarter_pow = 1;
  for (int n = 0; n <= n_max; ++n) {
    sum += alpha_eval(n, s) * quarter_pow / (Real(2 * n + 1) - s);
    quarter_pow /= 4;
  }
  return exp(-s * log(pi())) * sum;
}

HComplex energy_direct(const HComplex& s, long n_points) {
  const long n = n_points;
  HComplex sum(0);
  const long half = (n - 1) / 2;
  for (long k = 1; k <= half; ++k) {
    const Real log_sin = log(sin(pi() * Real(k) / Real(n)));
    sum += 2 * exp(-s * log_sin);
  }
  if (n % 2 == 0) sum += exp(-s * log(sin(pi() / 2)));  // middle term, sin = 1
  return exp(-s * log(Real(2))) * Real(n) * sum;
}

Real g_constant(int m) {
  const Real ratio = rational_to_real(coeffs::alpha_derivative_at_odd(m).value /
                                      coeffs::alpha_at_odd(m).value);
  Real half_harmonic = 0, odd_harmonic = 0;
  for (int k = 1; k <= m; ++k) {
    half_harmonic += Real(1) / (2 * k);
    odd_harmonic += Real(1) / (2 * k - 1);
  }
  // (psi(M+1) - psi(M+1/2))/2 = log 2 + H_M/2 - sum 1/(2k-1)
  const Real digamma_gap = log(Real(2)) + half_harmonic - odd_harmonic;
  Rational poch(1);
  for (int k = 0; k < m; ++k) poch *= Rational(2 * k + 1, 2);
  const Rational scale = poch / specfun::factorial(m);
  Real pow4 = 1;
  for (int k = 0; k < m; ++k) pow4 *= 4;
  return rational_to_real(scale) / (pow4 * pi()) *
         (ratio + digamma_gap - log(pi()));
}

HComplex energy_asymptotic(const HComplex& s, long n_points, int p) {
  const Real n(n_points);
  const Real log_n = log(n);
  const HComplex front = 2 * exp(-s * log(2 * pi()));
  if (s.imag() == 0 && s.real() > 0 && floor(s.real()) == s.real() &&
      fmod(s.real(), Real(2)) == 1) {
    const int m = (int)((s.real().convert_to<double>() - 1.0) / 2.0);
    Rational poch(1);
    for (int k = 0; k < m; ++k) poch *= Rational(2 * k + 1, 2);
    Rational pow4(1);
    for (int k = 0; k < m; ++k) pow4 *= 4;
    const Real lead = rational_to_real(poch / (pow4 * specfun::factorial(m))) / pi();
    HComplex value = HComplex(lead * n * n * log_n) +
                     HComplex((g_constant(m) + lead * euler_gamma()) * n * n);
    for (int i = 0; i <= p; ++i) {
      if (i == m) continue;
      value += front * alpha_eval(i, s) * zeta(s - Real(2 * i)) *
               exp((HComplex(1) + s - Real(2 * i)) * log_n);
    }
    return value;
  }
  HComplex value = v_s_series(s, kVsSeriesTerms) * n * n;
  for (int i = 0; i <= p; ++i) {
    value += front * alpha_eval(i, s) * zeta(s - Real(2 * i)) *
             exp((HComplex(1) + s - Real(2 * i)) * log_n);
  }
  return value;
}

std::vector<HComplex> norlund_series(const HComplex& s, int k_max) {
  // e_k: coefficients of (e^z - 1)/z
  std::vector<Real> e(k_max + 1);
  Real fact = 1;
  for (int k = 0; k <= k_max; ++k) {
    fact *= (k + 1);
    e[k] = Real(1) / fact;
  }
  // f = 1/e
  std::vector<Real> f(k_max + 1);
  f[0] = 1;
  for (int k = 1; k <= k_max; ++k) {
    Real acc = 0;
    for (int j = 1; j <= k; ++j) acc += e[j] * f[k - j];
    f[k] = -acc;
  }
  // g = log f
  std::vector<Real> g(k_max + 1);
  g[0] = 0;
  for (int k = 1; k <= k_max; ++k) {
    Real acc = k * f[k];
    for (int j = 1; j < k; ++j) acc -= j * g[j] * f[k - j];
    g[k] = acc / k;
  }
  // h = exp(s g + s z / 2)
  std::vector<HComplex> v(k_max + 1), h(k_max + 1);
  for (int k = 1; k <= k_max; ++k) v[k] = s * g[k];
  if (k_max >= 1) v[1] += s / Real(2);
  h[0] = 1;
  for (int k = 1; k <= k_max; ++k) {
    HComplex acc(0);
    for (int j = 1; j <= k; ++j) acc += Real(j) * v[j] * h[k - j];
    h[k] = acc / Real(k);
  }
  return h;
}

}  // namespace riesz::hp
