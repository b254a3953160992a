#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace riesz {

using Complex = std::complex<double>;
using Rational = boost::multiprecision::cpp_rational;

/// Exact rational carrying an implicit factor pi^pi_power.
struct RationalPi {
  Rational value;
  int pi_power = 0;

  double to_double() const;
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : Error {
  using Error::Error;
};

struct PoleError : DomainError {
  using DomainError::DomainError;
};

struct CapacityError : Error {
  using Error::Error;
};

/// s - 2n = 1: the coefficient c_n(s) is undefined and the caller must
/// switch to the exceptional (odd integer s) machinery.
struct ExceptionalIndexError : DomainError {
  using DomainError::DomainError;
};

struct ConfigError : Error {
  using Error::Error;
};

struct PrecisionError : Error {
  using Error::Error;
};

struct PrecisionConfig {
  int precision_digits = 16;
  int zeta_partial_terms = 32;    // Euler-Maclaurin partial sum length M
  int zeta_bernoulli_terms = 16;  // Euler-Maclaurin correction terms K
  int bernoulli_capacity = 64;    // largest 2K with B_{2K} tabulated
  int alpha_capacity = 64;        // largest n with alpha_n(s) tabulated
  int quadrature_nodes = 16;
  int series_n_max = 48;
  double series_tolerance = 1e-13;

  bool extended() const { return precision_digits >= 25; }
};

const PrecisionConfig& default_config();

/// Rejects NaN/infinite scalars at the API boundary.
void require_finite(const Complex& z, const char* what);

bool is_integer(double x);

}  // namespace riesz
