// Command-line front end: energy evaluators, coefficient dumps, and the
// verification suites, with machine-readable output.
//
// Exit codes: 0 success, 1 verification failure, 2 parse error,
// 3 domain/configuration error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "riesz/coeffs.hpp"
#include "riesz/energy.hpp"
#include "riesz/specfun.hpp"
#include "riesz/verify.hpp"

using nlohmann::json;
using riesz::Complex;

namespace {

struct ParseFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "a", "a+bi", "a-bi"; no spaces
Complex parse_complex(const std::string& text) {
  static const std::regex pattern(
      R"(^([+-]?\d+(?:\.\d*)?(?:[eE][+-]?\d+)?)(?:([+-]\d+(?:\.\d*)?(?:[eE][+-]?\d+)?)i)?$)");
  std::smatch match;
  if (!std::regex_match(text, match, pattern))
    throw ParseFailure("cannot parse '" + text +
                       "' as a complex number (expected a or a+bi, no spaces)");
  const double re = std::stod(match[1].str());
  const double im = match[2].matched ? std::stod(match[2].str()) : 0.0;
  return {re, im};
}

struct OutputSink {
  std::string path;

  void write(const std::string& payload) const {
    if (path.empty()) {
      std::cout << payload << "\n";
    } else {
      std::ofstream os(path, std::ios::binary);
      os << payload << "\n";
    }
  }
};

riesz::PrecisionConfig make_config(int digits) {
  if (digits < 15) throw riesz::ConfigError("precision must be >= 15 digits");
  riesz::PrecisionConfig cfg;
  cfg.precision_digits = digits;
  return cfg;
}

std::string format_complex(Complex z) {
  std::ostringstream os;
  os.precision(16);
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

int run_energy(const std::string& s_text, long n, const std::string& method,
               int p, int n_max, int digits, const std::string& format,
               const OutputSink& sink) {
  const Complex s = parse_complex(s_text);
  const auto cfg = make_config(digits);

  Complex value;
  std::string used = method;
  std::optional<riesz::energy::Expansion> expansion;
  if (s == Complex(0.0, 0.0)) {
    if (method != "direct")
      throw riesz::DomainError(
          "s = 0 is the logarithmic case; only the default/direct path "
          "routes to -N ln N");
    value = Complex(riesz::energy::energy_log(n), 0.0);
    used = "log";
  } else if (method == "direct") {
    value = riesz::energy::energy_direct(s, n);
  } else if (method == "series") {
    value = riesz::energy::energy_series(s, n, p, n_max, cfg).value;
  } else if (method == "asymptotic") {
    auto res = riesz::energy::energy_asymptotic(s, n, p, cfg);
    value = res.value;
    expansion = std::move(res.expansion);
  } else {
    throw ParseFailure("unknown method '" + method + "'");
  }

  if (format == "json") {
    sink.write(riesz::energy::result_to_json(
                   s, n, used.c_str(), p, value,
                   expansion ? &*expansion : nullptr)
                   .dump(2));
  } else if (format == "csv") {
    std::ostringstream os;
    os.precision(16);
    os << "s_re,s_im,N,method,p,value_re,value_im\n"
       << s.real() << "," << s.imag() << "," << n << "," << used << "," << p
       << "," << value.real() << "," << value.imag();
    sink.write(os.str());
  } else {
    std::ostringstream os;
    os.precision(16);
    os << "L_s(N) = " << format_complex(value) << "  [s=" << format_complex(s)
       << ", N=" << n << ", method=" << used << "]";
    if (expansion) {
      os << "\nremainder order: N^" << expansion->remainder_order;
      if (expansion->leading) {
        os << "\n  " << expansion->leading->log_coefficient << " * N^2 log N"
           << "\n  " << expansion->leading->const_coefficient << " * N^2";
      } else {
        os << "\n  V_s = " << format_complex(expansion->quadratic)
           << " (* N^2)";
      }
      for (const auto& t : expansion->terms)
        os << "\n  n=" << t.n << ": " << format_complex(t.coefficient)
           << " * N^(" << format_complex(t.exponent) << ")";
    }
    sink.write(os.str());
  }
  return 0;
}

int run_coeffs(int n_max, const std::string& s_text, bool exceptional,
               const std::string& format, const OutputSink& sink) {
  if (n_max > riesz::coeffs::alpha_table().capacity())
    throw riesz::CapacityError("--n-max beyond the alpha table capacity");

  if (s_text.empty()) {
    json rows = json::array();
    for (int n = 0; n <= n_max; ++n)
      rows.push_back(riesz::coeffs::alpha_table().poly(n).to_json());
    if (format == "csv") {
      std::ostringstream os;
      os << "n,pi_power,rationals\n";
      for (const auto& row : rows) {
        os << row["n"] << "," << row["pi_power"] << ",\"";
        bool first = true;
        for (const auto& r : row["rationals"]) {
          if (!first) os << " ";
          os << r.get<std::string>();
          first = false;
        }
        os << "\"\n";
      }
      sink.write(os.str());
    } else {
      sink.write(rows.dump(2));
    }
    return 0;
  }

  const Complex s = parse_complex(s_text);
  json rows = json::array();
  for (int n = 0; n <= n_max; ++n) {
    try {
      const auto c = riesz::coeffs::c_coefficient(n, s);
      json row{{"n", n}, {"c", {c.value.real(), c.value.imag()}}};
      if (c.sign_hint) row["sign_hint"] = *c.sign_hint;
      rows.push_back(row);
    } catch (const riesz::ExceptionalIndexError&) {
      if (!exceptional) throw;
      rows.push_back({{"n", n}, {"c", nullptr}, {"note", "exceptional index"}});
    }
  }
  if (format == "csv") {
    std::ostringstream os;
    os.precision(16);
    os << "n,c_re,c_im\n";
    for (const auto& row : rows) {
      os << row["n"] << ",";
      if (row["c"].is_null())
        os << ",";
      else
        os << row["c"][0].get<double>() << "," << row["c"][1].get<double>();
      os << "\n";
    }
    sink.write(os.str());
  } else {
    sink.write(rows.dump(2));
  }
  return 0;
}

int run_verify(const std::string& suite, const std::string& s_text, int p,
               int digits, uint64_t seed, const OutputSink& sink) {
  const auto cfg = make_config(digits);
  json reports = json::array();
  bool all_pass = true;

  const auto add = [&](riesz::verify::VerificationReport report) {
    report.seed = seed;
    all_pass = all_pass && report.all_pass();
    reports.push_back(report.to_json());
  };

  if (suite == "identity" || suite == "all") {
    add(riesz::verify::run_identity_suite(cfg));
  }
  if (suite == "order" || suite == "all") {
    const Complex s = s_text.empty() ? Complex(0.5, 0.0) : parse_complex(s_text);
    const auto grid = riesz::verify::default_order_grid();
    json fits = json::array();
    if (suite == "all") {
      for (int order : {0, 1}) {
        const auto fit = riesz::verify::fit_error_order(s, order, grid);
        all_pass = all_pass && fit.pass;
        fits.push_back(fit.to_json());
      }
    } else {
      const auto fit = riesz::verify::fit_error_order(s, p, grid);
      all_pass = all_pass && fit.pass;
      fits.push_back(fit.to_json());
    }
    reports.push_back({{"suite", "order"}, {"seed", seed}, {"fits", fits}});
  }
  if (suite == "signs" || suite == "all") {
    const double s = s_text.empty() ? 3.0 : parse_complex(s_text).real();
    add(riesz::verify::audit_signs(suite == "all" ? 3.0 : s, 10));
  }
  if (suite == "divergence" || suite == "all") {
    riesz::PrecisionConfig div_cfg = cfg;
    if (suite == "all") div_cfg.precision_digits = std::max(digits, 50);
    const double s = s_text.empty() ? 0.5 : parse_complex(s_text).real();
    add(riesz::verify::audit_divergence(suite == "all" ? 0.5 : s, 2, div_cfg));
  }
  if (suite == "optimality" || suite == "all") {
    const double s = s_text.empty() ? 1.0 : parse_complex(s_text).real();
    add(riesz::verify::audit_optimality(suite == "all" ? 1.0 : s, 20, 1000,
                                        1e-3, seed));
  }
  if (reports.empty()) throw ParseFailure("unknown suite '" + suite + "'");

  sink.write(json{{"suite", suite}, {"seed", seed}, {"reports", reports}}.dump(2));
  return all_pass ? 0 : 1;
}

int run_table(const std::vector<std::string>& s_list,
              const std::vector<long>& n_list, int p, int digits,
              const OutputSink& sink) {
  const auto cfg = make_config(digits);
  std::ostringstream os;
  os.precision(16);
  os << "s,N,p,direct_re,direct_im,asymptotic_re,asymptotic_im,err\n";
  for (const auto& s_text : s_list) {
    const Complex s = parse_complex(s_text);
    for (long n : n_list) {
      const Complex direct = riesz::energy::energy_direct(s, n);
      const Complex asym = riesz::energy::energy_asymptotic(s, n, p, cfg).value;
      os << s_text << "," << n << "," << p << "," << direct.real() << ","
         << direct.imag() << "," << asym.real() << "," << asym.imag() << ","
         << std::abs(direct - asym) << "\n";
    }
  }
  sink.write(os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Riesz s-energy of N equally spaced points on the unit circle"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  int digits = 16;
  std::string format = "text";
  uint64_t seed = 42;
  std::string out_path;
  app.add_option("--precision", digits,
                 "working precision in digits (>= 15; >= 25 enables the "
                 "extended mode)")
      ->envname("RIESZ_PRECISION");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", seed, "64-bit RNG seed, recorded in reports");
  app.add_option("--out", out_path, "write the payload to this file");

  auto* energy_cmd = app.add_subcommand("energy", "evaluate L_s(N)");
  std::string s_text, method = "direct";
  long n_points = 0;
  int p = 2, n_max = 48;
  energy_cmd->add_option("--s", s_text, "s as a real or a+bi")->required();
  energy_cmd->add_option("--N", n_points, "number of points (>= 2)")->required();
  energy_cmd->add_option("--method", method, "evaluator")
      ->check(CLI::IsMember({"direct", "series", "asymptotic"}));
  energy_cmd->add_option("--p", p, "truncation order");
  energy_cmd->add_option("--n-max", n_max, "series length cap");

  auto* coeffs_cmd = app.add_subcommand("coeffs", "alpha/c coefficient tables");
  std::string coeffs_s;
  int coeffs_n_max = 0;
  bool exceptional = false;
  coeffs_cmd->add_option("--n-max", coeffs_n_max)->required();
  coeffs_cmd->add_option("--s", coeffs_s, "evaluate c_n(s) instead of the exact table");
  coeffs_cmd->add_flag("--exceptional", exceptional,
                       "tolerate the exceptional index s-2n=1");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::string verify_s;
  int verify_p = 3;
  verify_cmd->add_option("--suite", suite)->required()
      ->check(CLI::IsMember(
          {"identity", "order", "signs", "divergence", "optimality", "all"}));
  verify_cmd->add_option("--s", verify_s);
  verify_cmd->add_option("--p", verify_p);

  auto* table_cmd = app.add_subcommand("table", "direct/asymptotic error table");
  std::vector<std::string> table_s;
  std::vector<long> table_n;
  int table_p = 3;
  table_cmd->add_option("--s", table_s)->required()->delimiter(',');
  table_cmd->add_option("--N", table_n)->required()->delimiter(',');
  table_cmd->add_option("--p", table_p);

  try {
    app.parse(argc, argv);
    const OutputSink sink{out_path};
    if (*energy_cmd)
      return run_energy(s_text, n_points, method, p, n_max, digits, format, sink);
    if (*coeffs_cmd)
      return run_coeffs(coeffs_n_max, coeffs_s, exceptional, format, sink);
    if (*verify_cmd)
      return run_verify(suite, verify_s, verify_p, digits, seed, sink);
    if (*table_cmd) return run_table(table_s, table_n, table_p, digits, sink);
    return 2;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const riesz::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
