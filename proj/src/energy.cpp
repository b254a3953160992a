#include "riesz/energy.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "riesz/coeffs.hpp"
#include "riesz/quadrature.hpp"
#include "riesz/specfun.hpp"

namespace riesz::energy {

namespace {

constexpr double kEulerGamma = 0.5772156649015328606065120900824024;

// Neumaier compensated accumulator
struct Kahan {
  double sum = 0.0, comp = 0.0;

  void add(double v) {
    const double t = sum + v;
    comp += (std::abs(sum) >= std::abs(v)) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  double get() const { return sum + comp; }
};

struct KahanComplex {
  Kahan re, im;

  void add(Complex v) {
    re.add(v.real());
    im.add(v.imag());
  }
  Complex get() const { return {re.get(), im.get()}; }
};

Complex cpow_real_base(double base, Complex expo) {
  if (expo.imag() == 0.0) return Complex(std::pow(base, expo.real()), 0.0);
  return std::exp(expo * std::log(base));
}

bool is_positive_odd_integer(Complex s) {
  return s.imag() == 0.0 && s.real() > 0.0 && is_integer(s.real()) &&
         std::fmod(s.real(), 2.0) == 1.0;
}

bool is_positive_even_integer(Complex s) {
  return s.imag() == 0.0 && s.real() > 0.0 && is_integer(s.real()) &&
         std::fmod(s.real(), 2.0) == 0.0;
}

void require_query(Complex s, long n_points) {
  require_finite(s, "energy");
  if (n_points < 2) throw DomainError("energy requires N >= 2");
  if (s == Complex(0.0, 0.0))
    throw DomainError("s = 0 is the logarithmic case; use energy_log");
}

Rational pochhammer_half(int m) {
  Rational p = 1;
  for (int k = 0; k < m; ++k) p *= Rational(2 * k + 1, 2);
  return p;
}

}  // namespace

nlohmann::json Expansion::to_json() const {
  nlohmann::json j;
  j["remainder_order"] = remainder_order;
  j["quadratic"] = {quadratic.real(), quadratic.imag()};
  if (leading) {
    j["leading"] = {{"log_coefficient", leading->log_coefficient},
                    {"const_coefficient", leading->const_coefficient}};
  }
  nlohmann::json terms_json = nlohmann::json::array();
  for (const auto& t : terms) {
    terms_json.push_back(
        {{"n", t.n},
         {"coefficient", {t.coefficient.real(), t.coefficient.imag()}},
         {"exponent", {t.exponent.real(), t.exponent.imag()}}});
  }
  j["terms"] = terms_json;
  return j;
}

Complex energy_direct(Complex s, long n_points) {
  require_query(s, n_points);
  const long n = n_points;
  const bool real_s = s.imag() == 0.0;
  KahanComplex acc;
  for (long k = 1; k <= (n - 1) / 2; ++k) {
    const double sine = std::sin(M_PI * (double)k / (double)n);
    const Complex term = real_s ? Complex(std::pow(sine, -s.real()), 0.0)
                                : std::exp(-s * std::log(sine));
    acc.add(term);
    acc.add(term);
  }
  if (n % 2 == 0) acc.add(Complex(1.0, 0.0));  // k = N/2, sin = 1
  return cpow_real_base(2.0, -s) * (double)n * acc.get();
}

double energy_log(long n_points) {
  if (n_points < 2) throw DomainError("energy_log requires N >= 2");
  return -(double)n_points * std::log((double)n_points);
}

double sine_product(long n_points) {
  if (n_points < 2) throw DomainError("sine_product requires N >= 2");
  double prod = 1.0;
  for (long k = 1; k < n_points; ++k)
    prod *= std::sin(M_PI * (double)k / (double)n_points);
  return prod;
}

Complex pairwise_energy(Complex s, const std::vector<double>& angles) {
  require_finite(s, "pairwise_energy");
  const size_t n = angles.size();
  KahanComplex acc;
  for (size_t j = 0; j < n; ++j) {
    for (size_t k = j + 1; k < n; ++k) {
      const double r = 2.0 * std::abs(std::sin(0.5 * (angles[j] - angles[k])));
      acc.add(2.0 * cpow_real_base(r, -s));
    }
  }
  return acc.get();
}

double pairwise_log_energy(const std::vector<double>& angles) {
  const size_t n = angles.size();
  Kahan acc;
  for (size_t j = 0; j < n; ++j) {
    for (size_t k = j + 1; k < n; ++k) {
      const double r = 2.0 * std::abs(std::sin(0.5 * (angles[j] - angles[k])));
      acc.add(-2.0 * std::log(r));
    }
  }
  return acc.get();
}

Complex v_s(Complex s) {
  require_finite(s, "v_s");
  if (s == Complex(0.0, 0.0)) return Complex(1.0, 0.0);
  if (is_positive_even_integer(s)) return Complex(0.0, 0.0);
  if (is_positive_odd_integer(s))
    throw PoleError("V_s pole at odd positive s; use the exceptional branch");
  return cpow_real_base(2.0, -s) * specfun::gamma(0.5 * (1.0 - s)) /
         (std::sqrt(M_PI) * specfun::gamma(1.0 - 0.5 * s));
}

Complex v_s_series(Complex s, int n_max) {
  require_finite(s, "v_s_series");
  if (is_positive_odd_integer(s))
    throw PoleError("V_s pole at odd positive s; use the exceptional branch");
  KahanComplex acc;
  double quarter_pow = 1.0;
  for (int n = 0; n <= n_max; ++n) {
    acc.add(coeffs::alpha_eval(n, s) * quarter_pow /
            (Complex(2 * n + 1, 0) - s));
    quarter_pow *= 0.25;
  }
  return cpow_real_base(M_PI, -s) * acc.get();
}

Complex v_s_alternative(Complex s) {
  require_finite(s, "v_s_alternative");
  if (is_positive_odd_integer(s))
    throw PoleError("V_s pole at odd positive s");
  return cpow_real_base(2.0, -s) * specfun::gamma(0.5 * s) *
         std::tan(0.5 * M_PI * s) /
         (std::sqrt(M_PI) * specfun::gamma(0.5 * (1.0 + s)));
}

Complex incomplete_zeta(Complex s, const IncompleteZetaParams& params,
                        const PrecisionConfig& cfg) {
  require_finite(s, "incomplete_zeta");
  if (s == Complex(1.0, 0.0))
    throw PoleError("incomplete zeta pole at s = 1; use psi_quantity");
  const int p = params.p;
  Complex out = 1.0 / (s - 1.0) + 0.5;
  for (int k = 1; k <= p; ++k) {
    const double b =
        (specfun::bernoulli_number(2 * k) / specfun::factorial(2 * k))
            .convert_to<double>();
    out += b * specfun::pochhammer(s, 2 * k - 1);
  }
  if (params.y > 1.0) {
    const Complex integral = quadrature::periodic_bernoulli_power_integral(
        2 * p + 1, params.y, -s - (double)(2 * p + 1), cfg);
    out -= specfun::pochhammer(s, 2 * p + 1) /
           specfun::factorial(2 * p + 1).convert_to<double>() * integral;
  }
  return out;
}

double psi_quantity(const IncompleteZetaParams& params,
                    const PrecisionConfig& cfg) {
  const int p = params.p;
  double out = 0.5;
  for (int k = 1; k <= p; ++k)
    out += (specfun::bernoulli_number(2 * k) / (2 * k)).convert_to<double>();
  if (params.y > 1.0) {
    out -= quadrature::periodic_bernoulli_power_integral(
               2 * p + 1, params.y, Complex(-(double)(2 * p + 2), 0.0), cfg)
               .real();
  }
  return out;
}

double g_constant(int m) {
  const double ratio = (coeffs::alpha_derivative_at_odd(m).value /
                        coeffs::alpha_at_odd(m).value)
                           .convert_to<double>();
  const double scale =
      (pochhammer_half(m) / specfun::factorial(m)).convert_to<double>();
  return scale / (std::pow(4.0, m) * M_PI) *
         (ratio + 0.5 * specfun::digamma(m + 1.0) -
          0.5 * specfun::digamma(m + 0.5) - std::log(M_PI));
}

double g_constant_series(int m, int n_max) {
  const double s = 2.0 * m + 1.0;
  const double alpha_m = coeffs::alpha_eval(m, Complex(s, 0.0)).real();
  Kahan acc;
  double quarter_pow = 1.0;
  for (int n = 0; n <= n_max; ++n) {
    if (n != m) {
      acc.add(coeffs::alpha_eval(n, Complex(s, 0.0)).real() * quarter_pow /
              (2.0 * (n - m)));
    }
    quarter_pow *= 0.25;
  }
  return alpha_m / (std::pow(2.0, s - 1.0) * std::pow(M_PI, s)) *
             std::log(0.5) +
         std::pow(M_PI, -s) * acc.get();
}

SeriesResult energy_series(Complex s, long n_points, int p, int n_max,
                           const PrecisionConfig& cfg) {
  require_query(s, n_points);
  if (n_max > coeffs::alpha_table().capacity())
    throw CapacityError("energy_series: n_max beyond alpha capacity");
  const double n = (double)n_points;
  const double log_n = std::log(n);
  const double y = 0.5 * n;
  const Complex front = 2.0 * cpow_real_base(2.0 * M_PI, -s);
  const IncompleteZetaParams iz_template(std::max(y, 1.0), p);

  SeriesResult result;
  KahanComplex acc;
  int exceptional_m = -1;
  if (is_positive_odd_integer(s)) {
    exceptional_m = (int)((s.real() - 1.0) / 2.0);
    const double lead =
        front.real() * coeffs::alpha_eval(exceptional_m, s).real();
    acc.add(Complex(lead * n * n * log_n, 0.0));
    acc.add(Complex((g_constant(exceptional_m) +
                     lead * psi_quantity(iz_template, cfg)) *
                        n * n,
                    0.0));
  } else {
    acc.add(v_s(s) * n * n);
  }

  int small_streak = 0;
  for (int i = 0; i <= n_max; ++i) {
    if (i == exceptional_m) continue;
    const Complex term =
        front * coeffs::alpha_eval(i, s) *
        incomplete_zeta(s - Complex(2 * i, 0), iz_template, cfg) *
        cpow_real_base(n, 1.0 + s - Complex(2 * i, 0));
    acc.add(term);
    result.terms_used = i + 1;
    result.last_term_magnitude = std::abs(term);
    if (i >= 6 &&
        std::abs(term) < cfg.series_tolerance * std::abs(acc.get())) {
      if (++small_streak >= 2) {
        result.value = acc.get();
        return result;
      }
    } else {
      small_streak = 0;
    }
  }
  result.value = acc.get();
  result.converged =
      result.last_term_magnitude <
      std::sqrt(cfg.series_tolerance) * std::max(std::abs(result.value), 1e-300);
  return result;
}

Complex exact_even(long s, long n_points) {
  if (s < 2 || s % 2 != 0)
    throw DomainError("exact_even requires a positive even integer s");
  if (n_points < 2) throw DomainError("exact_even requires N >= 2");
  const int m = (int)(s / 2);
  if (m > coeffs::alpha_table().capacity())
    throw CapacityError("exact_even: s/2 beyond alpha capacity");
  Rational two_pow = 1;  // 2^{2M-1}
  for (int i = 0; i < 2 * m - 1; ++i) two_pow *= 2;
  Rational value = 0;
  const Rational s_rat(s);
  for (int i = 0; i <= m; ++i) {
    const Rational a = coeffs::alpha_table().poly(i).eval_exact(s_rat);
    const Rational z = (i == m) ? Rational(-1, 2)
                                : specfun::zeta_even(m - i).value;
    Rational n_pow = 1;
    for (long e = 0; e < 1 + s - 2 * i; ++e) n_pow *= n_points;
    value += a * z * n_pow / two_pow;
  }
  return Complex(value.convert_to<double>(), 0.0);
}

AsymptoticResult energy_asymptotic(Complex s, long n_points, int p,
                                   const PrecisionConfig& cfg) {
  require_query(s, n_points);
  if (p < 0) throw DomainError("energy_asymptotic requires p >= 0");
  if (p > coeffs::alpha_table().capacity())
    throw CapacityError("energy_asymptotic: p beyond coefficient table");
  const double n = (double)n_points;
  const double log_n = std::log(n);

  AsymptoticResult out;
  out.expansion.remainder_order = -1.0 + s.real() - 2.0 * p;

  // near the exceptional line V_s and c_M(s) blow up individually
  if (s.imag() == 0.0 && s.real() > 0.0 && !is_positive_odd_integer(s)) {
    const double nearest = 2.0 * std::round((s.real() - 1.0) / 2.0) + 1.0;
    if (nearest >= 1.0 && std::abs(s.real() - nearest) < 1e-9)
      throw DomainError(
          "s within 1e-9 of an odd positive integer: evaluate the exceptional "
          "branch at s = " + std::to_string((long)nearest));
  }

  if (is_positive_even_integer(s) &&
      (long)(s.real() / 2.0) <= coeffs::alpha_table().capacity()) {
    out.value = exact_even((long)s.real(), n_points);
    out.expansion.quadratic = Complex(0.0, 0.0);
    for (int i = 0; i <= p; ++i) {
      const auto c = coeffs::c_coefficient(i, s);
      out.expansion.terms.push_back({i, c.value, 1.0 + s - Complex(2 * i, 0)});
    }
    return out;
  }

  KahanComplex acc;
  if (is_positive_odd_integer(s)) {
    const int m = (int)((s.real() - 1.0) / 2.0);
    const double lead = (pochhammer_half(m) / specfun::factorial(m))
                            .convert_to<double>() /
                        (std::pow(4.0, m) * M_PI);
    const double quad = g_constant(m) + lead * kEulerGamma;
    out.expansion.leading = Expansion::LogLeading{lead, quad};
    acc.add(Complex(lead * n * n * log_n, 0.0));
    acc.add(Complex(quad * n * n, 0.0));
    for (int i = 0; i <= p; ++i) {
      if (i == m) continue;
      const auto c = coeffs::c_coefficient(i, s);
      const Complex expo = 1.0 + s - Complex(2 * i, 0);
      out.expansion.terms.push_back({i, c.value, expo});
      acc.add(c.value * cpow_real_base(n, expo));
    }
    out.value = acc.get();
    return out;
  }

  const Complex quad = v_s(s);
  out.expansion.quadratic = quad;
  acc.add(quad * n * n);
  for (int i = 0; i <= p; ++i) {
    const auto c = coeffs::c_coefficient(i, s);
    const Complex expo = 1.0 + s - Complex(2 * i, 0);
    out.expansion.terms.push_back({i, c.value, expo});
    acc.add(c.value * cpow_real_base(n, expo));
  }
  out.value = acc.get();
  return out;
}

nlohmann::json result_to_json(Complex s, long n_points, const char* method,
                              int p, Complex value, const Expansion* expansion) {
  nlohmann::json j{{"s", {s.real(), s.imag()}},
                   {"N", n_points},
                   {"method", method},
                   {"p", p},
                   {"value", {value.real(), value.imag()}}};
  if (expansion) {
    const auto ej = expansion->to_json();
    j["terms"] = ej["terms"];
    j["remainder_order"] = ej["remainder_order"];
    if (ej.contains("leading")) j["leading"] = ej["leading"];
  } else {
    j["terms"] = nlohmann::json::array();
    j["remainder_order"] = nullptr;
  }
  return j;
}

}  // namespace riesz::energy
