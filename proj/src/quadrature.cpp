#include "riesz/quadrature.hpp"

#include <cmath>
#include <map>

#include "riesz/specfun.hpp"

namespace riesz::quadrature {

GaussLegendre::GaussLegendre(int n) : x(n), w(n) {
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
}

const GaussLegendre& rule(int n) {
  static std::map<int, GaussLegendre> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, GaussLegendre(n)).first;
  return it->second;
}

namespace {

Complex power_of(double x, Complex power) {
  if (power.imag() == 0.0) return Complex(std::pow(x, power.real()), 0.0);
  return std::exp(power * std::log(x));
}

// one subinterval [a, b] with floor(a) == base (no interior corner)
Complex segment(int m, double a, double b, long base, Complex power, int nodes) {
  const auto& gl = rule(nodes);
  const double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
  Complex acc(0.0, 0.0);
  for (size_t i = 0; i < gl.x.size(); ++i) {
    const double t = mid + hw * gl.x[i];
    acc += gl.w[i] * specfun::bernoulli_poly(m, t - (double)base) *
           power_of(t, power);
  }
  return hw * acc;
}

}  // namespace

Complex periodic_bernoulli_power_integral(int m, double y, Complex power,
                                          const PrecisionConfig& cfg) {
  if (y < 1.0) throw DomainError("integral lower bound exceeds y");
  Complex total(0.0, 0.0);
  double a = 1.0;
  while (a < y) {
    const long base = (long)std::floor(a);
    const double b = std::min((double)(base + 1), y);
    const Complex coarse = segment(m, a, b, base, power, cfg.quadrature_nodes);
    const Complex fine = segment(m, a, b, base, power, 2 * cfg.quadrature_nodes);
    total += (std::abs(fine - coarse) >
              cfg.series_tolerance * (1.0 + std::abs(fine)))
                 ? fine
                 : coarse;
    a = b;
  }
  return total;
}

}  // namespace riesz::quadrature
