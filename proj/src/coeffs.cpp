#include "riesz/coeffs.hpp"

#include <cmath>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>
#include <nlohmann/json.hpp>

#include "riesz/highprec.hpp"
#include "riesz/specfun.hpp"

namespace riesz::coeffs {

Complex AlphaPolynomial::eval(Complex s) const {
  Complex acc(0.0, 0.0);
  for (int j = n; j >= 0; --j) acc = acc * s + q_dbl[j];
  return acc * std::pow(M_PI, 2 * n);
}

Rational AlphaPolynomial::eval_exact(const Rational& s) const {
  Rational acc = 0;
  for (int j = n; j >= 0; --j) acc = acc * s + q[j];
  return acc;
}

nlohmann::json AlphaPolynomial::to_json() const {
  nlohmann::json rationals = nlohmann::json::array();
  for (const auto& r : q) {
    std::ostringstream os;
    os << r;
    rationals.push_back(os.str());
  }
  return nlohmann::json{{"n", n}, {"pi_power", 2 * n}, {"rationals", rationals}};
}

AlphaTable::AlphaTable(int n_max) {
  // zeta(2k)/pi^{2k} as exact rationals
  std::vector<Rational> zr(n_max + 1);
  for (int k = 1; k <= n_max; ++k) zr[k] = specfun::zeta_even(k).value;

  polys_.resize(n_max + 1);
  polys_[0].n = 0;
  polys_[0].q = {Rational(1)};
  for (int n = 1; n <= n_max; ++n) {
    // derivative in s: d(s) = sum_{m<n} p_m(s) zr_{n-m} / (n-m)
    std::vector<Rational> d(n);
    for (int m = 0; m < n; ++m) {
      const Rational scale = zr[n - m] / (n - m);
      const auto& pm = polys_[m].q;
      for (int j = 0; j <= m; ++j) d[j] += pm[j] * scale;
    }
    auto& poly = polys_[n];
    poly.n = n;
    poly.q.assign(n + 1, Rational(0));
    for (int j = 0; j < n; ++j) poly.q[j + 1] = d[j] / (j + 1);
  }
  for (auto& poly : polys_) {
    poly.q_dbl.resize(poly.q.size());
    for (size_t j = 0; j < poly.q.size(); ++j)
      poly.q_dbl[j] = poly.q[j].convert_to<double>();
  }
}

const AlphaPolynomial& AlphaTable::poly(int n) const {
  if (n < 0 || n > capacity())
    throw CapacityError("alpha index " + std::to_string(n) +
                        " beyond table capacity " + std::to_string(capacity()));
  return polys_[n];
}

const AlphaTable& alpha_table() {
  static const AlphaTable table(default_config().alpha_capacity);
  return table;
}

Complex alpha_eval(int n, Complex s) {
  require_finite(s, "alpha_eval");
  return alpha_table().poly(n).eval(s);
}

RationalPi alpha_derivative_at_odd(int m) {
  if (m == 0) return RationalPi{Rational(0), 0};
  const Rational s(2 * m + 1);
  Rational sum = 0;
  for (int i = 0; i < m; ++i) {
    sum += alpha_table().poly(i).eval_exact(s) * specfun::zeta_even(m - i).value /
           (m - i);
  }
  return RationalPi{sum, 2 * m};
}

RationalPi alpha_at_odd(int m) {
  return RationalPi{alpha_table().poly(m).eval_exact(Rational(2 * m + 1)),
                    2 * m};
}

double generalized_bernoulli_check(int n_max, Complex s) {
  require_finite(s, "generalized_bernoulli_check");
  const hp::HComplex s_hp(s.real(), s.imag());
  const auto h = hp::norlund_series(s_hp, 2 * n_max);
  const hp::Real two_pi_sq = 4 * hp::pi() * hp::pi();
  double worst = 0.0;
  hp::Real scale = 1;  // (2pi)^{2n}
  for (int n = 0; n <= n_max; ++n) {
    hp::HComplex via_norlund = h[2 * n] * scale;
    if (n % 2 == 1) via_norlund = -via_norlund;
    const Complex oracle(via_norlund.real().convert_to<double>(),
                         via_norlund.imag().convert_to<double>());
    const Complex got = alpha_eval(n, s);
    const double denom = std::max(std::abs(oracle), 1e-300);
    worst = std::max(worst, std::abs(got - oracle) / denom);
    scale *= two_pi_sq;
  }
  return worst;
}

ExpansionCoefficient c_coefficient(int n, Complex s) {
  require_finite(s, "c_coefficient");
  const Complex arg = s - Complex(2 * n, 0);
  if (arg == Complex(1.0, 0.0))
    throw ExceptionalIndexError(
        "c_coefficient: s - 2n = 1 at n = " + std::to_string(n) +
        "; use the exceptional (odd s) expansion");
  ExpansionCoefficient out;
  out.n = n;
  const Complex z = specfun::zeta(arg);
  if (s.imag() == 0.0 && s.real() > 0.0) {
    out.sign_hint = (z.real() > 0.0) ? 1 : (z.real() < 0.0 ? -1 : 0);
  }
  if (z == Complex(0.0, 0.0)) {
    out.value = Complex(0.0, 0.0);
    return out;
  }
  out.value = 2.0 * std::exp(-s * std::log(2.0 * M_PI)) * alpha_eval(n, s) * z;
  return out;
}

std::vector<double> divergence_profile(double s, long n_points, int n_max,
                                       const PrecisionConfig& cfg) {
  if (!cfg.extended())
    throw PrecisionError("divergence_profile requires extended precision");
  if (!(s > 0.0)) throw DomainError("divergence_profile requires s > 0");
  if (n_max > alpha_table().capacity())
    throw CapacityError("divergence_profile: n_max beyond alpha capacity");
  const bool even_integer = is_integer(s) && std::fmod(s, 2.0) == 0.0;
  const bool odd_integer = is_integer(s) && std::fmod(s, 2.0) == 1.0;
  if (odd_integer)
    throw DomainError("divergence_profile: odd integer s hits the zeta pole");

  std::vector<double> out(n_max + 1);
  if (even_integer) {
    // terminating case: c_n(2M) = 0 for n > M
    const int m = (int)(s / 2.0);
    for (int n = 0; n <= n_max; ++n) {
      if (n > m) {
        out[n] = 0.0;
        continue;
      }
      const double cn = std::abs(c_coefficient(n, Complex(s, 0)).value);
      out[n] = cn * std::pow((double)n_points, -2.0 * n);
    }
    return out;
  }

  using hp::Real;
  const Real s_hp(s);
  const Real front = 2 / hp::pi() * fabs(sin(hp::pi() * s_hp / 2));
  const Real two_pi_n_sq =
      4 * hp::pi() * hp::pi() * Real(n_points) * Real(n_points);
  Real denom = 1;  // (2 pi N)^{2n}
  for (int n = 0; n <= n_max; ++n) {
    const Real arg = 2 * n + 1 - s_hp;
    Real mag;
    if (arg > Real(1.5)) {
      mag = front * fabs(hp::alpha_eval(n, hp::HComplex(s_hp)).real()) *
            boost::math::tgamma(arg) * hp::zeta(hp::HComplex(arg)).real() /
            denom;
    } else {
      // near/left of the gamma-zeta crossover: the direct form is stable here
      mag = fabs((2 * exp(-s_hp * log(2 * hp::pi())) *
                  hp::alpha_eval(n, hp::HComplex(s_hp)) *
                  hp::zeta(hp::HComplex(s_hp - 2 * n)))
                     .real()) *
            exp(-2 * n * log(Real(n_points)));
    }
    out[n] = mag.convert_to<double>();
    denom *= two_pi_n_sq;
  }
  return out;
}

}  // namespace riesz::coeffs
