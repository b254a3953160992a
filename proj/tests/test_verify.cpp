#include <cmath>
#include <sstream>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "riesz/verify.hpp"

using namespace riesz::verify;

TEST_CASE("splitmix64 reference stream") {
  // reference output of the canonical splitmix64 for seed 1234567
  SplitMix64 rng(1234567);
  CHECK(rng.next() == 6457827717110365317ULL);
  CHECK(rng.next() == 3203168211198807973ULL);
  SplitMix64 again(1234567);
  CHECK(again.next() == 6457827717110365317ULL);
  for (int i = 0; i < 1000; ++i) {
    const double u = again.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("report bookkeeping and json determinism") {
  VerificationReport r;
  r.suite = "demo";
  r.seed = 42;
  CHECK(r.check("ok", 1e-12, 1e-9));
  CHECK_FALSE(r.check("bad", 1.0, 1e-9));
  r.notice("skip", "terminating case");
  CHECK(r.passed() == 2);
  CHECK(r.failed() == 1);
  CHECK_FALSE(r.all_pass());
  CHECK(r.to_json().dump() == r.to_json().dump());
}

TEST_CASE("identity suite") {
  const auto report = run_identity_suite();
  for (const auto& c : report.cases) {
    INFO(c.name, " residual=", c.residual, " tol=", c.tolerance);
    CHECK(c.pass);
  }
  CHECK(report.all_pass());
  CHECK(report.cases.size() >= 30);
}

TEST_CASE("slope fit: real and exceptional") {
  const std::vector<long> grid = default_order_grid();
  {
    const auto fit = fit_error_order({0.5, 0.0}, 1, grid);
    CHECK_FALSE(fit.terminating);
    CHECK(fit.expected_slope == doctest::Approx(-2.5));
    CHECK(std::abs(fit.fitted_slope - fit.expected_slope) < 0.2);
    CHECK(fit.pass);
  }
  {
    // exceptional s = 1, p = 2 -> slope -4
    const auto fit = fit_error_order({1.0, 0.0}, 2, grid);
    CHECK(fit.expected_slope == doctest::Approx(-4.0));
    CHECK(fit.pass);
  }
  {
    // terminating even case flagged, not failed
    const auto fit = fit_error_order({2.0, 0.0}, 1, grid);
    CHECK(fit.terminating);
    CHECK(fit.pass);
  }
}

TEST_CASE("slope fit csv") {
  const auto fit = fit_error_order({2.0, 0.0}, 1, {128, 256});
  std::ostringstream os;
  fit.write_csv(os);
  const std::string text = os.str();
  CHECK(text.rfind("N,err,predicted_order", 0) == 0);
  CHECK(text.find("\r") == std::string::npos);
}

TEST_CASE("audit_signs") {
  for (double s : {0.5, 3.0, 5.5}) {
    const auto r = audit_signs(s, 10);
    INFO("s=", s);
    CHECK(r.all_pass());
  }
  CHECK_THROWS_AS(audit_signs(6.0, 10), riesz::DomainError);
}

TEST_CASE("audit_divergence") {
  riesz::PrecisionConfig ext = riesz::default_config();
  ext.precision_digits = 50;
  CHECK_THROWS_AS(audit_divergence(0.5, 2, riesz::default_config()),
                  riesz::ConfigError);
  CHECK(audit_divergence(0.5, 2, ext).all_pass());
  CHECK(audit_divergence(1.5, 3, ext).all_pass());
  // terminating notice for s = 2
  const auto r = audit_divergence(2.0, 2, ext);
  CHECK(r.all_pass());
}

TEST_CASE("audit_optimality") {
  CHECK(audit_optimality(0.5, 20, 200, 1e-3, 42).all_pass());
  CHECK(audit_optimality(1.0, 20, 200, 1e-3, 42).all_pass());
  CHECK(audit_optimality(3.0, 20, 200, 1e-3, 42).all_pass());
  CHECK(audit_optimality(-1.0, 20, 200, 1e-3, 42).all_pass());
  // Bjorck comparison at s = -3, N = 4
  const auto bj = audit_optimality(-3.0, 4, 50, 1e-3, 42);
  CHECK(bj.all_pass());
}

TEST_CASE("seeded reports are byte-identical") {
  const auto a = audit_optimality(1.0, 20, 300, 1e-3, 977).to_json().dump(2);
  const auto b = audit_optimality(1.0, 20, 300, 1e-3, 977).to_json().dump(2);
  CHECK(a == b);
}
