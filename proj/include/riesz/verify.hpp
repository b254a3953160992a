#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "riesz/types.hpp"

namespace riesz::verify {

/// Counter-based splittable generator; the 64-bit seed is recorded in
/// every report so runs are reproducible byte for byte.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next();
  double uniform();  // [0, 1)
  double uniform(double lo, double hi);

 private:
  uint64_t state_;
};

struct CaseResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  std::string note;
};

struct VerificationReport {
  std::string suite;
  uint64_t seed = 0;
  std::vector<CaseResult> cases;

  bool check(const std::string& name, double residual, double tolerance,
             const std::string& note = "");
  void notice(const std::string& name, const std::string& note);
  int passed() const;
  int failed() const;
  bool all_pass() const { return failed() == 0; }
  nlohmann::json to_json() const;
};

struct SlopeFitReport {
  Complex s;
  int p = 0;
  std::vector<long> n_grid;
  std::vector<double> errors;
  double fitted_slope = 0.0;
  double expected_slope = 0.0;
  double tolerance = 0.2;
  bool pass = false;
  bool terminating = false;  // all-zero errors: exact case, not a failure

  nlohmann::json to_json() const;
  void write_csv(std::ostream& os) const;
};

/// Cross-method identity checks: closed forms, incomplete-zeta series vs
/// direct summation across all s regimes, pairwise equivalence, V_s routes.
VerificationReport run_identity_suite(
    const PrecisionConfig& cfg = default_config());

/// Least-squares slope of ln err vs ln N against -1 + Re s - 2p.
/// Evaluated in extended precision (the residuals are far below double).
SlopeFitReport fit_error_order(Complex s, int p, const std::vector<long>& n_grid,
                               double tolerance = 0.2);

/// sgn c_n(s) = sgn zeta(s - 2n) for real s > 0 (non-even).
VerificationReport audit_signs(double s, int n_max);

/// Coefficient growth |c_n(s) N^{-2n}|: last decile must dominate.
VerificationReport audit_divergence(double s, long n_points,
                                    const PrecisionConfig& cfg);

/// Random angle perturbations around the roots of unity; clustered
/// two-point comparison for s < -2.
VerificationReport audit_optimality(double s, long n_points, int trials,
                                    double scale, uint64_t seed);

std::vector<long> default_order_grid();

}  // namespace riesz::verify
