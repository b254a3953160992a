#include <cmath>
#include <complex>
#include <vector>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "riesz/coeffs.hpp"
#include "riesz/energy.hpp"
#include "riesz/quadrature.hpp"
#include "riesz/specfun.hpp"
#include "riesz/verify.hpp"

using riesz::Complex;
using namespace riesz::energy;

namespace {

constexpr double kGamma = 0.5772156649015328606;

double rel(Complex got, Complex want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

std::vector<double> root_angles(long n) {
  std::vector<double> a(n);
  for (long k = 0; k < n; ++k) a[k] = 2.0 * M_PI * k / n;
  return a;
}

}  // namespace

TEST_CASE("energy_direct small closed forms") {
  // s=2, N=4: csc^2 at 45/90/135 degrees summed -> 5
  CHECK(rel(energy_direct({2.0, 0.0}, 4), {5.0, 0.0}) < 1e-14);
  // s=-2, N=7: V_{-2} N^2 = 98
  CHECK(rel(energy_direct({-2.0, 0.0}, 7), {98.0, 0.0}) < 1e-14);
  // s=-3, N=4: 32 (2 (sqrt2/2)^3 + 1)
  const double bjorck = 32.0 * (2.0 * std::pow(std::sqrt(2.0) / 2.0, 3) + 1.0);
  CHECK(rel(energy_direct({-3.0, 0.0}, 4), {bjorck, 0.0}) < 1e-14);
  CHECK(rel(energy_direct({2.0, 0.0}, 2), {0.5, 0.0}) < 1e-15);
}

TEST_CASE("energy_direct equals pairwise double sum") {
  riesz::verify::SplitMix64 rng(31);
  const Complex samples[] = {{0.5, 0.0}, {-1.0, 0.0}, {3.0, 0.0},
                             {2.0, 1.0}, {-1.2, 0.7}};
  for (const Complex& s : samples) {
    for (long n : {2L, 3L, 17L, 64L, 200L}) {
      const Complex lhs = energy_direct(s, n);
      const Complex rhs = pairwise_energy(s, root_angles(n));
      CHECK(rel(lhs, rhs) < 1e-12);
    }
  }
  (void)rng;
}

TEST_CASE("energy_log and sine product") {
  CHECK(energy_log(2) == doctest::Approx(-2.0 * std::log(2.0)).epsilon(1e-15));
  CHECK(energy_log(10) == doctest::Approx(-10.0 * std::log(10.0)).epsilon(1e-15));
  CHECK(sine_product(6) == doctest::Approx(6.0 / 32.0).epsilon(1e-13));
  for (long n : {2L, 5L, 17L, 40L})
    CHECK(sine_product(n) ==
          doctest::Approx(n * std::pow(2.0, 1.0 - n)).epsilon(1e-12));
  // pairwise log-energy oracle
  for (long n : {3L, 25L, 180L})
    CHECK(pairwise_log_energy(root_angles(n)) ==
          doctest::Approx(-double(n) * std::log(double(n))).epsilon(1e-11));
}

TEST_CASE("v_s closed values") {
  CHECK(v_s({0.0, 0.0}) == Complex(1.0, 0.0));
  CHECK(v_s({2.0, 0.0}) == Complex(0.0, 0.0));
  CHECK(v_s({4.0, 0.0}) == Complex(0.0, 0.0));
  CHECK(rel(v_s({-2.0, 0.0}), {2.0, 0.0}) < 1e-13);
  CHECK(rel(v_s({-4.0, 0.0}), {6.0, 0.0}) < 1e-13);
  CHECK_THROWS_AS(v_s({1.0, 0.0}), riesz::PoleError);
  CHECK_THROWS_AS(v_s({3.0, 0.0}), riesz::PoleError);
}

TEST_CASE("v_s cross-forms agree") {
  CHECK(rel(v_s_series({-2.0, 0.0}, 40), {2.0, 0.0}) < 1e-10);
  CHECK(rel(v_s_series({0.0, 0.0}, 40), {1.0, 0.0}) < 1e-13);
  CHECK(rel(v_s_series({0.5, 0.0}, 40), v_s({0.5, 0.0})) < 1e-10);

  riesz::verify::SplitMix64 rng(37);
  int done = 0;
  while (done < 50) {
    const Complex s(rng.uniform(-4, 4), rng.uniform(-3, 3));
    // stay away from the odd-integer poles and the alternative form's
    // own removable points
    bool near_pole = false;
    for (int k = -4; k <= 6; ++k)
      if (std::abs(s - Complex(k, 0.0)) < 0.15) near_pole = true;
    if (near_pole) continue;
    const Complex a = v_s(s);
    CHECK(rel(v_s_series(s, 48), a) < 1e-9);
    CHECK(rel(v_s_alternative(s), a) < 1e-9);
    ++done;
  }
}

TEST_CASE("incomplete zeta basics") {
  // y = 1, p = 0: empty integral
  const Complex s(2.5, -0.5);
  CHECK(rel(incomplete_zeta(s, {1.0, 0}), 1.0 / (s - 1.0) + 0.5) < 1e-14);
  CHECK_THROWS_AS(incomplete_zeta({1.0, 0.0}, {10.0, 2}), riesz::PoleError);
  CHECK_THROWS_AS(IncompleteZetaParams(0.5, 1), riesz::DomainError);
  CHECK_THROWS_AS(IncompleteZetaParams(2.0, -1), riesz::DomainError);
}

TEST_CASE("incomplete zeta converges to zeta with explicit bound") {
  using riesz::specfun::bernoulli_number;
  using riesz::specfun::pochhammer;
  using riesz::specfun::zeta;

  // analytic truncation bound plus a roundoff floor: for large y the
  // bound drops far below what double arithmetic can resolve
  auto bound = [](Complex s, double y, int p) {
    const double b2p =
        std::abs(bernoulli_number(2 * p).convert_to<double>());
    double fact = 1.0;
    for (int j = 2; j <= 2 * p; ++j) fact *= j;
    return std::abs(pochhammer(s, 2 * p + 1)) * b2p / fact /
           (s.real() + 2 * p) * std::pow(y, -s.real() - 2 * p) + 1e-13;
  };

  CHECK(std::abs(incomplete_zeta({3.0, 0.0}, {1e4, 2}) - zeta({3.0, 0.0})) <=
        bound({3.0, 0.0}, 1e4, 2));
  CHECK(std::abs(incomplete_zeta({0.5, 2.0}, {100.0, 3}) - zeta({0.5, 2.0})) <=
        bound({0.5, 2.0}, 100.0, 3));

  riesz::verify::SplitMix64 rng(41);
  int done = 0;
  while (done < 20) {
    const Complex s(rng.uniform(-3, 4), rng.uniform(-3, 3));
    const int p = 1 + (int)(rng.uniform() * 4);
    if (s.real() + 2 * p <= 0.25) continue;
    if (std::abs(s - Complex(1.0, 0.0)) < 0.1) continue;
    const double y = 10.0 + rng.uniform() * 200.0;
    CHECK(std::abs(incomplete_zeta(s, {y, p}, riesz::default_config()) -
                   zeta(s)) <= bound(s, y, p) * (1 + 1e-9));
    ++done;
  }
}

TEST_CASE("psi quantity") {
  using riesz::specfun::bernoulli_number;
  // y = 1, p = 2: 1/2 + B_2/2 + B_4/4
  const double want = 0.5 + 1.0 / 12.0 - 1.0 / 120.0;
  CHECK(psi_quantity({1.0, 2}) == doctest::Approx(want).epsilon(1e-14));
  CHECK(psi_quantity({1e3, 3}) == doctest::Approx(kGamma).epsilon(1e-12));
  // tail bound O(y^{-2p-2}) around gamma
  CHECK(std::abs(psi_quantity({10.0, 2}) - kGamma) < 1.0 * std::pow(10.0, -6));
  CHECK(std::abs(psi_quantity({10.0, 5}) - kGamma) < 10.0 * std::pow(10.0, -12));
  (void)bernoulli_number;
}

TEST_CASE("g_constant") {
  CHECK(g_constant(0) == doctest::Approx(std::log(2.0 / M_PI) / M_PI).epsilon(1e-13));
  CHECK(g_constant_series(0, 60) == doctest::Approx(g_constant(0)).epsilon(1e-9));
  // M=1 components: alpha_1'(3)/alpha_1(3) = 1/3
  using riesz::specfun::digamma;
  const double want1 = (0.25 / M_PI) * 0.5 *
                       (1.0 / 3.0 + 0.5 * digamma(2.0) - 0.5 * digamma(1.5) -
                        std::log(M_PI));
  CHECK(g_constant(1) == doctest::Approx(want1).epsilon(1e-12));
  CHECK(g_constant_series(1, 60) == doctest::Approx(g_constant(1)).epsilon(1e-8));
}

TEST_CASE("energy_series is an identity") {
  CHECK(rel(energy_series({2.0, 0.0}, 6, 2, 30).value,
            energy_direct({2.0, 0.0}, 6)) < 1e-10);
  CHECK(rel(energy_series({1.0, 0.0}, 8, 3, 30).value,
            energy_direct({1.0, 0.0}, 8)) < 1e-10);
  CHECK(rel(energy_series({-1.2, 0.7}, 5, 2, 40).value,
            energy_direct({-1.2, 0.7}, 5)) < 1e-9);
  CHECK(rel(energy_series({3.0, 0.0}, 11, 2, 40).value,
            energy_direct({3.0, 0.0}, 11)) < 1e-10);
  CHECK(rel(energy_series({5.0, 0.0}, 9, 3, 40).value,
            energy_direct({5.0, 0.0}, 9)) < 1e-10);
}

TEST_CASE("energy_asymptotic exact cases") {
  for (long n : {2L, 10L, 100L, 1999L}) {
    const double quad = double(n) * (double(n) * n - 1.0) / 12.0;
    const auto r2 = energy_asymptotic({2.0, 0.0}, n, 1);
    CHECK(rel(r2.value, {quad, 0.0}) < 1e-13);
    const double quart =
        double(n) * (double(n) * n - 1.0) * (double(n) * n + 11.0) / 720.0;
    const auto r4 = energy_asymptotic({4.0, 0.0}, n, 2);
    CHECK(rel(r4.value, {quart, 0.0}) < 1e-13);
  }
  CHECK(rel(energy_asymptotic({4.0, 0.0}, 10, 2).value, {152.625, 0.0}) < 1e-14);
  // s=-2: all c_n terms exactly zero
  const auto rneg = energy_asymptotic({-2.0, 0.0}, 9, 0);
  CHECK(rel(rneg.value, {162.0, 0.0}) < 1e-13);
  for (const auto& t : rneg.expansion.terms) CHECK(t.coefficient == Complex(0.0, 0.0));
}

TEST_CASE("exact_even") {
  CHECK(rel(exact_even(2, 4), {5.0, 0.0}) < 1e-15);
  CHECK(rel(exact_even(4, 2), {0.125, 0.0}) < 1e-15);
  CHECK(rel(exact_even(2, 2), {0.5, 0.0}) < 1e-15);
  CHECK_THROWS_AS(exact_even(3, 4), riesz::DomainError);
  // terminating invariant against direct at larger N
  for (long n : {1000L, 100000L})
    CHECK(rel(exact_even(2, n), energy_direct({2.0, 0.0}, n)) < 1e-12);
}

TEST_CASE("energy_asymptotic structure and guards") {
  CHECK_THROWS_AS(energy_asymptotic({0.0, 0.0}, 10, 1), riesz::DomainError);
  CHECK_THROWS_AS(energy_asymptotic({3.0 + 1e-12, 0.0}, 10, 1),
                  riesz::DomainError);

  const auto gen = energy_asymptotic({0.5, 0.0}, 100, 3);
  CHECK_FALSE(gen.expansion.leading.has_value());
  CHECK(gen.expansion.remainder_order ==
        doctest::Approx(-1.0 + 0.5 - 6.0).epsilon(1e-15));
  REQUIRE(gen.expansion.terms.size() == 4);
  for (size_t i = 0; i + 1 < gen.expansion.terms.size(); ++i)
    CHECK(gen.expansion.terms[i].exponent.real() ==
          gen.expansion.terms[i + 1].exponent.real() + 2.0);

  const auto exc = energy_asymptotic({3.0, 0.0}, 50, 2);
  REQUIRE(exc.expansion.leading.has_value());
  CHECK(exc.expansion.leading->log_coefficient ==
        doctest::Approx(1.0 / (8.0 * M_PI)).epsilon(1e-13));
}

TEST_CASE("asymptotic error shrinks with N at the theoretical rate") {
  // crude two-point order check in double (the precise fit lives in hp)
  const Complex s(0.5, 0.0);
  const double e1 = std::abs(energy_direct(s, 128) - energy_asymptotic(s, 128, 0).value);
  const double e2 = std::abs(energy_direct(s, 512) - energy_asymptotic(s, 512, 0).value);
  const double slope = std::log(e2 / e1) / std::log(512.0 / 128.0);
  CHECK(slope == doctest::Approx(-1.0 + 0.5 - 0.0).epsilon(0.15));
}

TEST_CASE("quadrature spot checks") {
  const auto& r = riesz::quadrature::rule(16);
  double wsum = 0.0;
  for (double w : r.w) wsum += w;
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
  // integral over a full period of C_1 x^0 from 1 to 3: zero
  const Complex z =
      riesz::quadrature::periodic_bernoulli_power_integral(1, 3.0, {0.0, 0.0},
                                                           riesz::default_config());
  CHECK(std::abs(z) < 1e-14);
  // oracle: int_1^2 (x - 1.5) x^{-2} dx = ln 2 - 0.75
  const Complex v =
      riesz::quadrature::periodic_bernoulli_power_integral(1, 2.0, {-2.0, 0.0},
                                                           riesz::default_config());
  CHECK(v.real() == doctest::Approx(std::log(2.0) - 0.75).epsilon(1e-13));
}

TEST_CASE("result json shape") {
  const auto r = energy_asymptotic({0.5, 0.0}, 64, 1);
  const auto j = result_to_json({0.5, 0.0}, 64, "asymptotic", 1, r.value,
                                &r.expansion);
  CHECK(j.at("N") == 64);
  CHECK(j.at("method") == "asymptotic");
  CHECK(j.at("s").size() == 2);
  CHECK(j.at("value").size() == 2);
  CHECK(j.contains("terms"));
  CHECK(j.contains("remainder_order"));
}
