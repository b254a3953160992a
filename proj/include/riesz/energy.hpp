#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "riesz/types.hpp"

namespace riesz::energy {

struct IncompleteZetaParams {
  double y = 1.0;
  int p = 0;

  IncompleteZetaParams(double y_, int p_) : y(y_), p(p_) {
    if (!(y >= 1.0)) throw DomainError("incomplete zeta requires y >= 1");
    if (p < 0) throw DomainError("incomplete zeta requires p >= 0");
  }
};

struct Expansion {
  struct Term {
    int n = 0;
    Complex coefficient;  // c_n(s)
    Complex exponent;     // 1 + s - 2n
  };
  // exceptional case: coefficients of N^2 log N and N^2
  struct LogLeading {
    double log_coefficient = 0.0;
    double const_coefficient = 0.0;
  };
  std::optional<LogLeading> leading;
  Complex quadratic;  // V_s (general case; zero in the exceptional case)
  std::vector<Term> terms;
  double remainder_order = 0.0;

  nlohmann::json to_json() const;
};

struct AsymptoticResult {
  Complex value;
  Expansion expansion;
};

struct SeriesResult {
  Complex value;
  int terms_used = 0;
  double last_term_magnitude = 0.0;
  bool converged = true;  // false carries a truncation warning
};

/// 2^{-s} N sum_k (sin pi k/N)^{-s}, compensated, symmetry-halved.
Complex energy_direct(Complex s, long n_points);

/// -N ln N (the s -> 0 logarithmic energy).
double energy_log(long n_points);

/// prod_{k=1}^{N-1} sin(pi k / N); equals 2^{1-N} N.
double sine_product(long n_points);

/// Pairwise double-sum energies over an arbitrary configuration of angles.
Complex pairwise_energy(Complex s, const std::vector<double>& angles);
double pairwise_log_energy(const std::vector<double>& angles);

/// V_s = 2^{-s} Gamma((1-s)/2) / (sqrt(pi) Gamma(1-s/2)); exact 0 at
/// positive even integers, pole error at odd positive integers.
Complex v_s(Complex s);

/// V_s via the alpha series.
Complex v_s_series(Complex s, int n_max);

/// The tan/Gamma alternative form of V_s (verification cross-route).
Complex v_s_alternative(Complex s);

Complex incomplete_zeta(Complex s, const IncompleteZetaParams& params,
                        const PrecisionConfig& cfg = default_config());

double psi_quantity(const IncompleteZetaParams& params,
                    const PrecisionConfig& cfg = default_config());

double g_constant(int m);

/// G_M through its series definition (verification cross-route).
double g_constant_series(int m, int n_max);

/// Exact incomplete-zeta series for the energy; an identity, not an
/// asymptotic truncation.
SeriesResult energy_series(Complex s, long n_points, int p, int n_max,
                           const PrecisionConfig& cfg = default_config());

AsymptoticResult energy_asymptotic(Complex s, long n_points, int p,
                                   const PrecisionConfig& cfg = default_config());

/// Terminating exact formula at s = 2M, evaluated in rational arithmetic.
Complex exact_even(long s, long n_points);

nlohmann::json result_to_json(Complex s, long n_points, const char* method,
                              int p, Complex value,
                              const Expansion* expansion = nullptr);

}  // namespace riesz::energy
