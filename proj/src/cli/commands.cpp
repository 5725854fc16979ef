#include "hardy/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "hardy/cli/symcheck.hpp"
#include "hardy/errors.hpp"
#include "hardy/groups/builtin.hpp"
#include "hardy/groups/starshaped.hpp"
#include "hardy/inequality/report.hpp"
#include "hardy/numerics/rayleigh.hpp"
#include "hardy/symbolic/parse.hpp"

namespace hardy::cli {

using inequality::HardySpec;
using inequality::WeightMode;
using numerics::TestFunction;

namespace {

struct RunConfig {
  std::string group = "heisenberg1";
  std::string mode = "halfspace";
  std::string n;
  std::string d = "0";
  double p = 2.0;
  std::string gamma = "optimal";
  std::string bump;
  std::string kind = "smooth";
  unsigned m = 3;
  std::size_t sweep = 0;
  std::uint64_t seed = 1;
  int order = 24;
  int subdivisions = 4;
  std::string out;
  // starshaped
  std::string levelset;
  std::size_t samples = 512;
  // rayleigh
  std::string family = "half_space";
  std::size_t max_iter = 500;
  double tol = 1e-6;
  std::string trace = "rayleigh_trace.csv";
  // symcheck
  bool tamper = false;
};

std::string fmt(double v, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string join(const std::vector<double>& v, int digits = 10) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + fmt(v[i], digits);
  return s;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::vector<sym::Rational> parse_rational_list(const std::string& text, const char* what) {
  std::vector<sym::Rational> out;
  for (const auto& piece : split(text, ',')) {
    if (piece.empty()) throw ParseError(std::string("empty entry in ") + what + " '" + text + "'");
    out.push_back(sym::parse_rational(piece));
  }
  if (out.empty()) throw ParseError(std::string("empty ") + what);
  return out;
}

std::vector<double> to_doubles(const std::vector<sym::Rational>& v) {
  std::vector<double> out;
  for (const auto& q : v) out.push_back(sym::to_double(q));
  return out;
}

/// "c1,c2,...:r" or "c1,...:r1,r2,...".
TestFunction parse_bump(const std::string& text, numerics::BumpKind kind, unsigned m) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("bump '" + text + "' must look like c1,c2,...:r or c...:r1,r2,...");
  const auto center = to_doubles(parse_rational_list(text.substr(0, colon), "bump center"));
  auto radii = to_doubles(parse_rational_list(text.substr(colon + 1), "bump radii"));
  if (radii.size() == 1) radii.assign(center.size(), radii.front());
  if (radii.size() != center.size())
    throw ParseError("bump '" + text + "' has " + std::to_string(center.size()) + " center and " +
                     std::to_string(radii.size()) + " radius components");
  return numerics::make_bump(kind, center, radii, m);
}

std::vector<sym::Rational> default_normal(const groups::Frame& frame) {
  const sym::Rational zero(0), one(1);
  if (frame.name() == "heisenberg1") return {zero, zero, one};
  if (frame.name() == "engel") return {one, zero, zero, sym::make_rational(1, 4)};
  if (frame.name() == "grushin") return {one, zero};
  throw ParseError("--n is required for frame '" + frame.name() + "'");
}

std::optional<double> parse_gamma(const std::string& text) {
  if (text == "optimal") return std::nullopt;
  return sym::to_double(sym::parse_rational(text));
}

HardySpec build_spec(const RunConfig& cfg) {
  HardySpec spec{groups::frame_by_name(cfg.group), inequality::weight_mode_from_string(cfg.mode), {}, cfg.p,
                 parse_gamma(cfg.gamma), ""};
  spec.label = spec.frame.name() + "." + inequality::to_string(spec.mode);
  spec.normal.n = cfg.n.empty() ? default_normal(spec.frame) : parse_rational_list(cfg.n, "normal");
  if (spec.mode == WeightMode::HalfSpace) spec.normal.d = sym::parse_rational(cfg.d);
  spec.validate();
  return spec;
}

numerics::QuadratureRule build_rule(const RunConfig& cfg) {
  numerics::QuadratureRule rule{cfg.order, cfg.subdivisions};
  try {
    rule.validate();
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  return rule;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ParseError("cannot open '" + path + "' for writing");
  os << text;
  if (!os) throw ParseError("failed writing '" + path + "'");
}

int cmd_symcheck(const RunConfig& cfg, std::ostream& out) {
  const auto results = run_identity_suite(cfg.tamper);
  out << format_identity_results(results);
  const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
  return ok ? kExitOk : kExitFailure;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const HardySpec spec = build_spec(cfg);
  const auto rule = build_rule(cfg);
  const auto kind = numerics::bump_kind_from_string(cfg.kind);
  const auto data = inequality::weight_data(spec);
  const double gamma = inequality::resolve_gamma(spec, data);

  std::vector<TestFunction> fs;
  if (!cfg.bump.empty()) {
    if (cfg.sweep > 0) throw ParseError("--bump and --sweep are mutually exclusive");
    fs.push_back(parse_bump(cfg.bump, kind, cfg.m));
    if (fs.back().dim() != spec.frame.dim_n())
      throw ParseError("bump dimension " + std::to_string(fs.back().dim()) + " does not match the group dimension " +
                       std::to_string(spec.frame.dim_n()));
    if (!inequality::admissible(fs.back(), spec)) {
      err << "inadmissible test function: support reaches weight "
          << fmt(inequality::min_weight_on_support(spec, fs.back())) << " (must exceed "
          << fmt(inequality::kAdmissibilityMargin) << ")\n";
      return kExitInadmissible;
    }
  } else if (cfg.sweep > 0) {
    fs = numerics::random_admissible_bumps(spec, cfg.sweep, cfg.seed, kind, cfg.m);
  } else {
    throw ParseError("verify needs --bump or --sweep");
  }

  std::vector<inequality::HardyReport> reports;
  bool ok = true;
  for (const auto& f : fs) {
    const auto I = inequality::hardy_integrals(spec, f, {spec.p}, rule).front();
    reports.push_back(inequality::assemble_report(spec, f, I, gamma));
    const auto& r = reports.back();
    ok = ok && r.holds();
    out << "deficit " << fmt(r.deficit) << " budget " << fmt(inequality::kDeficitBudgetFactor * r.quad_error)
        << (r.holds() ? " OK" : " NEGATIVE") << "\n";
  }
  const auto json = cfg.bump.empty() ? inequality::to_json(reports) : inequality::to_json(reports.front());
  if (cfg.out.empty())
    out << inequality::report_text(json);
  else
    write_text(cfg.out, inequality::report_text(json));
  return ok ? kExitOk : kExitFailure;
}

int cmd_starshaped(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const groups::Frame frame = groups::frame_by_name(cfg.group);
  if (!frame.descriptor()) throw ParseError("frame '" + frame.name() + "' has no dilation structure");
  if (cfg.levelset.empty()) throw ParseError("starshaped needs --levelset");
  const auto phi = sym::parse_polynomial(cfg.levelset, frame.vars());
  for (std::size_t v = frame.dim_n(); v < frame.vars().size(); ++v)
    if (phi.depends_on(v)) throw ParseError("levelset may only use x1..x" + std::to_string(frame.dim_n()));
  groups::StarshapedOptions opts;
  opts.samples = cfg.samples;
  opts.seed = cfg.seed;
  groups::StarshapedResult res;
  try {
    res = groups::starshaped_check(*frame.descriptor(), phi, opts);
  } catch (const DegenerateBoundaryError& e) {
    err << "degenerate boundary: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const SamplingError& e) {
    err << "boundary not sampled: " << e.what() << "\n";
    return kExitDegenerate;
  }
  out << "verdict: " << groups::to_string(res.verdict) << "\n";
  out << "boundary_points: " << res.boundary_points << "\n";
  out << "min_value: " << fmt(res.min_value) << "\n";
  if (res.verdict == groups::StarshapedVerdict::Violated) {
    out << "witness: " << join(res.witness) << "\n";
    out << "witness_value: " << fmt(res.min_value) << "\n";
    return kExitViolated;
  }
  return kExitOk;
}

int cmd_rayleigh(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  HardySpec spec = build_spec(cfg);
  const auto rule = build_rule(cfg);
  const auto data = inequality::weight_data(spec);
  if (!data.lp_vanishes()) {
    err << "the L_p term survives for this spec (q = " << data.q_at_p.to_string()
        << "); the Rayleigh quotient against W1 alone is not a Hardy constant here, sweep gamma with verify instead\n";
    return kExitLpSurvives;
  }
  const auto kind = numerics::bump_kind_from_string(cfg.kind);
  numerics::BumpFamily family;
  if (cfg.family == "half_space") {
    family = numerics::half_space_family(spec, kind, cfg.m);
  } else if (cfg.family == "fixed") {
    if (cfg.bump.empty()) throw ParseError("family 'fixed' needs --bump");
    const auto f = parse_bump(cfg.bump, kind, cfg.m);
    if (!inequality::admissible(f, spec)) {
      err << "inadmissible test function\n";
      return kExitInadmissible;
    }
    family = numerics::fixed_family(f);
  } else {
    throw ParseError("unknown family '" + cfg.family + "' (expected half_space or fixed)");
  }

  const auto res = numerics::minimize_quotient(spec, family, {cfg.max_iter, cfg.tol}, rule);
  const double constant = inequality::best_constant(spec.p);
  out << "constant " << fmt(constant);
  if (spec.p == std::floor(spec.p) && spec.p < 64) {
    const auto ip = static_cast<long>(spec.p);
    mpz_class num, den;
    mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(ip - 1), static_cast<unsigned long>(ip));
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(ip), static_cast<unsigned long>(ip));
    out << " (" << sym::to_string(sym::Rational(num, den)) << ")";
  }
  out << "\n";
  out << "best " << fmt(res.quotient) << "\n";
  out << "gap " << fmt(res.quotient - constant) << "\n";
  out << "iterations " << res.iterations << "\n";
  out << "converged " << (res.converged ? "true" : "false") << "\n";
  out << "params " << join(res.best_params) << "\n";

  std::string csv = "iteration,quotient\n";
  for (std::size_t i = 0; i < res.trace.size(); ++i) csv += std::to_string(i) + "," + fmt(res.trace[i], 17) + "\n";
  if (!cfg.trace.empty()) write_text(cfg.trace, csv);
  return kExitOk;
}

void add_spec_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--group", cfg.group, "heisenberg1, engel, grushin or a frame file")->capture_default_str();
  sub->add_option("--mode", cfg.mode, "halfspace or starshaped")->capture_default_str();
  sub->add_option("--n", cfg.n, "constant normal, comma-separated");
  sub->add_option("--d", cfg.d, "half-space offset")->capture_default_str();
  sub->add_option("--p", cfg.p, "exponent p > 1")->capture_default_str();
  sub->add_option("--kind", cfg.kind, "smooth or poly")->capture_default_str();
  sub->add_option("--m", cfg.m, "poly bump exponent")->capture_default_str();
  sub->add_option("--bump", cfg.bump, "c1,c2,...:r or c1,...:r1,r2,...");
  sub->add_option("--order", cfg.order, "Gauss-Legendre points per axis")->capture_default_str();
  sub->add_option("--subdivisions", cfg.subdivisions, "cells per axis")->capture_default_str();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

/// Flat key=value lines; '#' starts a comment, values may be quoted.
std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot open config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  for (std::size_t lineno = 1; std::getline(is, line); ++lineno) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos || trim(line.substr(0, eq)).empty())
      throw ParseError("config line " + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') && value.back() == value.front())
      value = value.substr(1, value.size() - 2);
    std::replace(key.begin(), key.end(), '_', '-');
    out.emplace_back(std::move(key), std::move(value));
  }
  return out;
}

/// Replaces "--config path" by the file's entries as flags placed right
/// after the subcommand. Keys also given on the command line are skipped.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw ParseError("--config needs a path");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (!path) return rest;
  auto given = [&](const std::string& key) {
    const std::string flag = "--" + key;
    return std::any_of(rest.begin(), rest.end(),
                       [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
  };
  std::vector<std::string> injected;
  for (const auto& [key, value] : read_config(*path)) {
    if (given(key)) continue;
    injected.push_back("--" + key);
    injected.push_back(value);
  }
  const auto sub = std::find_if(rest.begin(), rest.end(), [](const std::string& a) { return a.rfind("-", 0) != 0; });
  if (sub == rest.end()) throw ParseError("--config needs a subcommand");
  rest.insert(sub + 1, injected.begin(), injected.end());
  return rest;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  try {
    args = expand_config(raw_args);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  RunConfig cfg;
  CLI::App app{"Hardy inequalities on stratified groups and Grushin-type frames", "hardy"};
  app.require_subcommand(1);

  auto* symcheck = app.add_subcommand("symcheck", "exact identity suite");
  symcheck->add_flag("--tamper", cfg.tamper, "corrupt a Heisenberg coefficient (negative control)");

  auto* verify = app.add_subcommand("verify", "evaluate both sides of the Hardy inequality");
  add_spec_options(verify, cfg);
  verify->add_option("--gamma", cfg.gamma, "gamma or 'optimal'")->capture_default_str();
  verify->add_option("--sweep", cfg.sweep, "number of seeded random admissible bumps");
  verify->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  verify->add_option("--out", cfg.out, "JSON report path (default stdout)");

  auto* starshaped = app.add_subcommand("starshaped", "sample <Z, n> on the boundary of {phi < 0}");
  starshaped->add_option("--group", cfg.group, "stratified group")->capture_default_str();
  starshaped->add_option("--levelset", cfg.levelset, "polynomial phi in x1..xn");
  starshaped->add_option("--samples", cfg.samples, "rays")->capture_default_str();
  starshaped->add_option("--seed", cfg.seed, "random seed")->capture_default_str();

  auto* rayleigh = app.add_subcommand("rayleigh", "minimize the Rayleigh quotient over a bump family");
  add_spec_options(rayleigh, cfg);
  rayleigh->add_option("--family", cfg.family, "half_space or fixed")->capture_default_str();
  rayleigh->add_option("--max-iter", cfg.max_iter, "Nelder-Mead iterations")->capture_default_str();
  rayleigh->add_option("--tol", cfg.tol, "Nelder-Mead tolerance")->capture_default_str();
  rayleigh->add_option("--trace", cfg.trace, "CSV trace path (empty to skip)")->capture_default_str();

  for (auto* sub : {verify, starshaped, rayleigh})
    sub->add_option("--config", "key=value file of option defaults; flags override it");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      out << sub->help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (symcheck->parsed()) return cmd_symcheck(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (starshaped->parsed()) return cmd_starshaped(cfg, out, err);
    if (rayleigh->parsed()) return cmd_rayleigh(cfg, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace hardy::cli
