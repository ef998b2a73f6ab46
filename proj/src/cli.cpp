// Copyright 2026 The birthday-bounds Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "birthday/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <string>

#include "birthday/bernoulli.hpp"
#include "birthday/enclosure.hpp"
#include "birthday/errors.hpp"
#include "birthday/faulhaber.hpp"
#include "birthday/int_expr.hpp"
#include "birthday/oracles.hpp"
#include "birthday/probability.hpp"
#include "birthday/render.hpp"
#include "birthday/tail_bounds.hpp"

namespace birthday {

CliRequest::CliRequest()
    : auto_n_cap(kDefaultAutoNCap), max_exact_k(kDefaultExactPiCap) {}

namespace {

void print_enclosure(std::ostream& out, const std::string& lo_key,
                     const std::string& hi_key, const Enclosure& e,
                     OutputFormat format, long digits) {
  if (format == OutputFormat::Rational) {
    out << lo_key << "=" << e.lo.to_string() << "\n";
    out << hi_key << "=" << e.hi.to_string() << "\n";
  } else {
    out << lo_key << "=" << render_decimal(e.lo, digits, RoundingDirection::Down) << "\n";
    out << hi_key << "=" << render_decimal(e.hi, digits, RoundingDirection::Up) << "\n";
  }
}

int run_bound(const CliRequest& req, std::ostream& out) {
  BetaOptions opts;
  opts.N = req.N;
  opts.target_digits = req.digits;
  opts.use_improved_lower = req.improved_lower;
  opts.auto_n_cap = req.auto_n_cap;

  if (req.format == OutputFormat::Log2) {
    if (req.k <= 1) {
      throw std::domain_error("log2 format requires beta > 0 (k >= 2)");
    }
    if (req.k <= req.n) {
      // The exponent needs target_digits of precision *relative* to beta,
      // so add its leading decimal zeros (estimated from the N=2 series
      // bound, beta > L - L^2/2 >= L/2 for L < 1) before computing.
      Rational rough = ln_series_lower(req.k, req.n, 2);
      double lg = approx_log10(rough);
      long zeros = lg < 0 ? static_cast<long>(std::ceil(-lg)) + 1 : 0;
      opts.target_digits = req.digits + zeros + 8;
    }
    BetaEnclosureResult res = beta_enclosure(req.k, req.n, opts);
    for (int bump = 0; res.beta.lo.is_zero() && bump < 3; ++bump) {
      opts.target_digits += 20;  // estimate fell short; widen and retry
      res = beta_enclosure(req.k, req.n, opts);
    }
    if (res.beta.hi >= Rational(1)) {  // pigeonhole: beta = 1 = 2^-0 exactly
      std::string zero = render_decimal(Rational(0), req.digits, RoundingDirection::Down);
      out << "beta_lower=" << zero << "\n" << "beta_upper=" << zero << "\n";
      return 0;
    }
    out << "beta_lower="
        << render_log2_exponent(res.beta.lo, req.digits, RoundingDirection::Down) << "\n";
    out << "beta_upper="
        << render_log2_exponent(res.beta.hi, req.digits, RoundingDirection::Up) << "\n";
    if (res.ln_result) {
      const LnEnclosureResult& ln = *res.ln_result;
      out << "ln_lower=" << (req.improved_lower ? ln.improved_lower : ln.lower).to_string() << "\n";
      out << "ln_upper=" << ln.upper.to_string() << "\n";
      out << "N=" << ln.N << "\n" << "M=" << res.M_used << "\n";
    }
    return 0;
  }

  BetaEnclosureResult res = beta_enclosure(req.k, req.n, opts);
  print_enclosure(out, "beta_lower", "beta_upper", res.beta, req.format, req.digits);
  if (res.ln_result) {
    const LnEnclosureResult& ln = *res.ln_result;
    out << "ln_lower=" << (req.improved_lower ? ln.improved_lower : ln.lower).to_string() << "\n";
    out << "ln_upper=" << ln.upper.to_string() << "\n";
    out << "N=" << ln.N << "\n" << "M=" << res.M_used << "\n";
  }
  return 0;
}

int run_exact(const CliRequest& req, std::ostream& out) {
  Rational pi = exact_pi(req.k, req.n, req.max_exact_k);
  Rational beta = Rational(1) - pi;
  out << "beta=" << beta.to_string() << "\n";
  out << "pi=" << pi.to_string() << "\n";
  return 0;
}

int run_expected(const CliRequest& req, std::ostream& out) {
  out << "expected=" << expected_collisions(req.k, req.n).to_string() << "\n";
  return 0;
}

int run_bernoulli(const CliRequest& req, std::ostream& out) {
  out << "bernoulli=" << bernoulli_value(req.m).to_string() << "\n";
  return 0;
}

int run_powersum(const CliRequest& req, std::ostream& out) {
  if (req.m < 1) throw std::domain_error("powersum: m must be >= 1");
  out << "powersum=" << power_sum(req.k, static_cast<unsigned long>(req.m)).num().get_str()
      << "\n";
  return 0;
}

int run_binom_factor(const CliRequest& req, std::ostream& out) {
  Enclosure e = binom_pi_factor(req.k, req.n, req.digits);
  print_enclosure(out, "factor_lower", "factor_upper", e, req.format, req.digits);
  return 0;
}

int run_orbit(const CliRequest& req, std::ostream& out) {
  OrbitProbabilities p =
      orbit_size_probabilities(req.k, req.n, req.digits, req.max_exact_k);
  print_enclosure(out, "orbit_exact_lower", "orbit_exact_upper", p.p_exact_size,
                  req.format, req.digits);
  print_enclosure(out, "orbit_greater_lower", "orbit_greater_upper", p.p_size_greater,
                  req.format, req.digits);
  out << "exact=" << (p.exact ? "true" : "false") << "\n";
  return 0;
}

struct RawArgs {
  std::string k, n, N = "auto", format = "decimal";
  long digits = 10;
  long m = 0;
  unsigned long max_exact_k = kDefaultExactPiCap;
  bool improved_lower = false;
};

void finish_request(CliRequest& req, const RawArgs& raw, bool wants_k, bool wants_n) {
  if (wants_k) req.k = parse_int_expr(raw.k);
  if (wants_n) req.n = parse_int_expr(raw.n);
  req.digits = raw.digits;
  req.m = raw.m;
  req.improved_lower = raw.improved_lower;
  req.max_exact_k = raw.max_exact_k;
  if (raw.N != "auto") {
    try {
      size_t used = 0;
      long value = std::stol(raw.N, &used);
      if (used != raw.N.size() || value < 2) throw std::invalid_argument("");
      req.N = value;
    } catch (const std::exception&) {
      throw std::invalid_argument("--N must be 'auto' or an integer >= 2, got '" +
                                  raw.N + "'");
    }
  }
  if (raw.format == "decimal") {
    req.format = OutputFormat::Decimal;
  } else if (raw.format == "rational") {
    req.format = OutputFormat::Rational;
  } else if (raw.format == "log2") {
    if (req.command != CliCommand::Bound) {
      throw std::invalid_argument("log2 format is only supported by 'bound'");
    }
    req.format = OutputFormat::Log2;
  } else {
    throw std::invalid_argument("unknown format '" + raw.format + "'");
  }
}

}  // namespace

int run(const CliRequest& request, std::ostream& out, std::ostream& err) {
  try {
    switch (request.command) {
      case CliCommand::Bound: return run_bound(request, out);
      case CliCommand::Exact: return run_exact(request, out);
      case CliCommand::Expected: return run_expected(request, out);
      case CliCommand::Bernoulli: return run_bernoulli(request, out);
      case CliCommand::PowerSum: return run_powersum(request, out);
      case CliCommand::BinomFactor: return run_binom_factor(request, out);
      case CliCommand::Orbit: return run_orbit(request, out);
    }
    err << "error: unknown command\n";
    return 2;
  } catch (const InapplicableError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified two-sided bounds on birthday-collision probabilities"};
  app.require_subcommand(1);

  RawArgs raw;
  CliRequest req;

  auto add_kn = [&](CLI::App* sub) {
    sub->add_option("--k", raw.k, "sample count, e.g. 23 or 2^32")->required();
    sub->add_option("--n", raw.n, "space size, e.g. 365 or 2^128")->required();
  };
  auto add_digits = [&](CLI::App* sub) {
    sub->add_option("--digits", raw.digits, "output precision (default 10)")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* bound = app.add_subcommand(
      "bound", "certified enclosure of the collision probability beta(k,n)");
  add_kn(bound);
  add_digits(bound);
  bound->add_option("--N", raw.N, "series cutoff, 'auto' (default) or integer >= 2");
  bound->add_option("--format", raw.format, "decimal (default), rational, or log2");
  bound->add_flag("--improved-lower", raw.improved_lower,
                  "use the sharpened series lower bound");

  CLI::App* exact = app.add_subcommand("exact", "exact rational beta and pi");
  add_kn(exact);
  exact->add_option("--max-exact-k", raw.max_exact_k, "exact-oracle cap (default 10000)");

  CLI::App* expected = app.add_subcommand("expected", "expected collision count k(k-1)/2n");
  add_kn(expected);

  CLI::App* bern = app.add_subcommand("bernoulli", "Bernoulli number (B^1 = +1/2 convention)");
  bern->add_option("--m", raw.m, "index >= 0")->required()->check(CLI::NonNegativeNumber);

  CLI::App* psum = app.add_subcommand("powersum", "power sum 1^m + 2^m + ... + k^m");
  psum->add_option("--k", raw.k, "upper limit, e.g. 200 or 2^32")->required();
  psum->add_option("--m", raw.m, "exponent >= 1")->required();

  CLI::App* binom = app.add_subcommand(
      "binom-factor", "enclosure of the factor pi(k,n) in C(n,k) = n^k/k! * pi(k,n)");
  add_kn(binom);
  add_digits(binom);
  binom->add_option("--format", raw.format, "decimal (default) or rational");

  CLI::App* orbit = app.add_subcommand(
      "orbit", "orbit-size probabilities for a random function on n elements");
  add_kn(orbit);
  add_digits(orbit);
  orbit->add_option("--format", raw.format, "decimal (default) or rational");
  orbit->add_option("--max-exact-k", raw.max_exact_k, "exact-oracle cap (default 10000)");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("birthday-bounds");
  for (const auto& a : args) argv_storage.push_back(a);
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (bound->parsed()) req.command = CliCommand::Bound;
    else if (exact->parsed()) req.command = CliCommand::Exact;
    else if (expected->parsed()) req.command = CliCommand::Expected;
    else if (bern->parsed()) req.command = CliCommand::Bernoulli;
    else if (psum->parsed()) req.command = CliCommand::PowerSum;
    else if (binom->parsed()) req.command = CliCommand::BinomFactor;
    else if (orbit->parsed()) req.command = CliCommand::Orbit;

    bool wants_k = req.command != CliCommand::Bernoulli;
    bool wants_n = wants_k && req.command != CliCommand::PowerSum;
    finish_request(req, raw, wants_k, wants_n);

    if (const char* cap_env = std::getenv("BIRTHDAY_BOUNDS_MAX_N")) {
      std::string cap_str(cap_env);
      size_t used = 0;
      long cap = 0;
      try {
        cap = std::stol(cap_str, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != cap_str.size() || cap < 2) {
        err << "error: invalid BIRTHDAY_BOUNDS_MAX_N value '" << cap_str << "'\n";
        return 2;
      }
      req.auto_n_cap = cap;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  return run(req, out, err);
}

}  // namespace birthday
