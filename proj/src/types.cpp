#include "riesz/types.hpp"

#include <cmath>

namespace riesz {

double RationalPi::to_double() const {
  const double q = value.convert_to<double>();
  if (pi_power == 0) return q;
  return q * std::pow(M_PI, pi_power);
}

const PrecisionConfig& default_config() {
  static const PrecisionConfig cfg{};
  return cfg;
}

void require_finite(const Complex& z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError(std::string(what) + ": non-finite value");
}

bool is_integer(double x) { return std::isfinite(x) && x == std::floor(x); }

}  // namespace riesz
