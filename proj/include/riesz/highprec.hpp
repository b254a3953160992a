#pragma once

#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "riesz/types.hpp"

// Extended-precision (50 digit) evaluation paths. Used where double
// precision cannot resolve the quantity under test: remainder-order
// fits, the divergence profile, and the generalized-Bernoulli cross-check.
namespace riesz::hp {

using Real = boost::multiprecision::cpp_bin_float_50;
using HComplex = boost::multiprecision::cpp_complex_50;

Real pi();
Real euler_gamma();

HComplex pochhammer(const HComplex& a, int m);
HComplex zeta(const HComplex& s);
HComplex alpha_eval(int n, const HComplex& s);

/// V_s through the alpha series; avoids a high-precision complex gamma.
HComplex v_s_series(const HComplex& s, int n_max);

HComplex energy_direct(const HComplex& s, long n_points);

/// Truncated expansion value, general and exceptional cases.
HComplex energy_asymptotic(const HComplex& s, long n_points, int p);

Real g_constant(int m);

/// Power-series coefficients h_k of (z/(e^z-1))^s e^{sz/2} up to order k_max,
/// built from scratch (series reciprocal of (e^z-1)/z, then log/exp).
std::vector<HComplex> norlund_series(const HComplex& s, int k_max);

}  // namespace riesz::hp
