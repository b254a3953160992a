#include "riesz/specfun.hpp"

#include <cmath>

namespace riesz::specfun {

namespace {

// Godfrey's 15-term Lanczos coefficient set for g = 607/128.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5};

Complex gamma_lanczos(Complex z) {
  // valid for Re z >= 1/2
  Complex acc(kLanczos[0], 0.0);
  for (int k = 1; k < 15; ++k) acc += kLanczos[k] / (z + Complex(k - 1, 0));
  const Complex base = z + Complex(kLanczosG - 0.5, 0.0);
  return std::sqrt(2.0 * M_PI) * std::pow(base, z - 0.5) * std::exp(-base) * acc;
}

}  // namespace

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Rational r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

BernoulliTable::BernoulliTable(int even_capacity)
    : even_capacity_(even_capacity) {
  const int n_max = even_capacity + 1;
  numbers_.resize(n_max + 1);
  numbers_[0] = 1;
  // sum_{k=0}^{n} C(n+1,k) B_k = 0 for n >= 1
  for (int n = 1; n <= n_max; ++n) {
    Rational acc = 0;
    for (int k = 0; k < n; ++k) acc += binomial(n + 1, k) * numbers_[k];
    numbers_[n] = -acc / (n + 1);
  }
  rows_.resize(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    rows_[n].resize(n + 1);
    for (int k = 0; k <= n; ++k) rows_[n][k] = binomial(n, k) * numbers_[n - k];
  }
}

const Rational& BernoulliTable::number(int k) const {
  if (k < 0 || k > max_index())
    throw CapacityError("Bernoulli index " + std::to_string(k) +
                        " beyond table capacity " + std::to_string(max_index()));
  return numbers_[k];
}

const std::vector<Rational>& BernoulliTable::poly_row(int n) const {
  if (n < 0 || n > max_index())
    throw CapacityError("Bernoulli polynomial degree " + std::to_string(n) +
                        " beyond table capacity " + std::to_string(max_index()));
  return rows_[n];
}

Rational BernoulliTable::poly_exact(int n, const Rational& x) const {
  const auto& row = poly_row(n);
  Rational acc = 0;
  for (int k = n; k >= 0; --k) acc = acc * x + row[k];
  return acc;
}

double BernoulliTable::poly(int n, double x) const {
  const auto& row = poly_row(n);
  double acc = 0.0;
  for (int k = n; k >= 0; --k)
    acc = acc * x + row[k].convert_to<double>();
  return acc;
}

const BernoulliTable& bernoulli_table() {
  // the alpha recurrence consumes zeta(2m) up to m = alpha_capacity,
  // which needs B_{2m}; size the shared table for both consumers
  static const BernoulliTable table(std::max(
      default_config().bernoulli_capacity, 2 * default_config().alpha_capacity));
  return table;
}

Rational bernoulli_number(int k) { return bernoulli_table().number(k); }

double bernoulli_poly(int n, double x) { return bernoulli_table().poly(n, x); }

double periodic_bernoulli(int n, double x) {
  double frac = x - std::floor(x);
  return bernoulli_table().poly(n, frac);
}

Complex pochhammer(Complex a, int m) {
  Complex prod(1.0, 0.0);
  for (int i = 0; i < m; ++i) prod *= a + Complex(i, 0);
  return prod;
}

Complex gamma(Complex z) {
  require_finite(z, "gamma");
  if (z.imag() == 0.0 && is_integer(z.real()) && z.real() <= 0.0)
    throw PoleError("gamma pole at z = " + std::to_string((long)z.real()));
  if (z.real() >= 0.5) return gamma_lanczos(z);
  // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
  return M_PI / (std::sin(M_PI * z) * gamma_lanczos(1.0 - z));
}

double digamma(double x) {
  if (!(x > 0.0)) throw DomainError("digamma requires x > 0");
  double acc = 0.0;
  while (x < 12.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  // asymptotic tail, B_{2k}/(2k x^{2k})
  static const double c[7] = {1.0 / 12.0,  -1.0 / 120.0,     1.0 / 252.0,
                              -1.0 / 240.0, 1.0 / 132.0,     -691.0 / 32760.0,
                              1.0 / 12.0};
  const double inv2 = 1.0 / (x * x);
  double tail = 0.0, powx = inv2;
  for (int k = 0; k < 7; ++k) {
    tail += c[k] * powx;
    powx *= inv2;
  }
  return acc + std::log(x) - 0.5 / x - tail;
}

RationalPi zeta_even(int m) {
  // zeta(2m) = (-1)^{m+1} B_{2m} (2pi)^{2m} / (2 (2m)!)
  Rational q = bernoulli_number(2 * m);
  Rational pow2 = 1;
  for (int i = 0; i < 2 * m; ++i) pow2 *= 2;
  q = q * pow2 / (2 * factorial(2 * m));
  if (m % 2 == 0) q = -q;
  return RationalPi{q, 2 * m};
}

bool is_trivial_zero(Complex s) {
  if (s.imag() != 0.0) return false;
  const double re = s.real();
  if (!(re < 0.0) || !is_integer(re)) return false;
  return std::fmod(-re, 2.0) == 0.0;
}

Complex zeta_euler_maclaurin(Complex s, int partial_terms, int bernoulli_terms) {
  const int m = partial_terms;
  Complex sum(0.0, 0.0);
  for (int k = 1; k < m; ++k) sum += std::exp(-s * std::log((double)k));
  const Complex log_m(std::log((double)m), 0.0);
  sum += std::exp((1.0 - s) * log_m) / (s - 1.0);
  sum += 0.5 * std::exp(-s * log_m);
  for (int k = 1; k <= bernoulli_terms; ++k) {
    const double coeff =
        (bernoulli_number(2 * k) / factorial(2 * k)).convert_to<double>();
    sum += coeff * pochhammer(s, 2 * k - 1) *
           std::exp((-s - (double)(2 * k - 1)) * log_m);
  }
  return sum;
}

Complex zeta(Complex s) {
  require_finite(s, "zeta");
  if (s == Complex(1.0, 0.0)) throw PoleError("zeta pole at s = 1");
  if (is_trivial_zero(s)) return Complex(0.0, 0.0);
  if (s == Complex(0.0, 0.0)) return Complex(-0.5, 0.0);
  if (s.imag() == 0.0 && s.real() > 0.0 && is_integer(s.real()) &&
      std::fmod(s.real(), 2.0) == 0.0)
    return Complex(zeta_even((int)(s.real() / 2.0)).to_double(), 0.0);
  if (s.imag() == 0.0 && s.real() < 0.0 && is_integer(s.real())) {
    // negative odd integer (the even ones are the trivial zeros above):
    // zeta(1 - 2m) = -B_{2m}/(2m), exact
    const int m = (int)((1.0 - s.real()) / 2.0);
    if (2 * m <= bernoulli_table().even_capacity())
      return Complex(
          (-bernoulli_number(2 * m) / (2 * m)).convert_to<double>(), 0.0);
  }
  const auto& cfg = default_config();
  if (s.real() < 0.5) {
    // reflect: the direct partial sum cancels catastrophically left of
    // the critical strip (terms grow like k^{-Re s} against an O(1) value)
    const Complex z1 = zeta_euler_maclaurin(1.0 - s, cfg.zeta_partial_terms,
                                            cfg.zeta_bernoulli_terms);
    return 2.0 * std::exp((s - 1.0) * std::log(2.0 * M_PI)) *
           std::sin(0.5 * M_PI * s) * gamma(1.0 - s) * z1;
  }
  return zeta_euler_maclaurin(s, cfg.zeta_partial_terms,
                              cfg.zeta_bernoulli_terms);
}

}  // namespace riesz::specfun
