#pragma once

#include <vector>

#include "riesz/types.hpp"

namespace riesz::quadrature {

/// Gauss-Legendre nodes/weights on [-1, 1], computed by Newton iteration.
struct GaussLegendre {
  explicit GaussLegendre(int n);
  std::vector<double> x, w;
};

const GaussLegendre& rule(int n);

/// integral_1^y C_m(x) x^power dx, split at the integer corner points of
/// the periodic Bernoulli function. Refines from 16 to 32 nodes per unit
/// subinterval when the two estimates disagree.
Complex periodic_bernoulli_power_integral(int m, double y, Complex power,
                                          const PrecisionConfig& cfg);

}  // namespace riesz::quadrature
