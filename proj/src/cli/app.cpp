#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "kgsymm/cli.hpp"
#include "kgsymm/error.hpp"

namespace kgsymm::cli {

namespace {

const std::set<std::string> kSubcommands = {"spectrum", "verify-algebra", "radial", "limits", "map"};

bool has_flag(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(),
                     [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
}

std::string scalar_text(const ojson& v, const std::string& key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) {
    std::ostringstream os;
    os.precision(17);
    os << v.get<double>();
    return os.str();
  }
  throw DomainError("config key '" + key + "' must be a string or a number");
}

// Folds a JSON config into the argument list. Keys are flag names without
// the leading dashes; anything already given on the command line wins.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + i, args.begin() + i + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + i);
      break;
    }
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open config file '" + path + "'");
  ojson cfg;
  try {
    cfg = ojson::parse(in);
  } catch (const ojson::exception& e) {
    throw DomainError("config file '" + path + "': " + e.what());
  }
  if (!cfg.is_object()) throw DomainError("config file must hold a JSON object");

  const bool has_sub = std::any_of(args.begin(), args.end(), [](const std::string& a) { return kSubcommands.count(a); });
  if (!has_sub && cfg.contains("subcommand")) {
    if (!cfg["subcommand"].is_string()) throw DomainError("config key 'subcommand' must be a string");
    args.insert(args.begin(), cfg["subcommand"].get<std::string>());
  }
  for (const auto& [key, value] : cfg.items()) {
    if (key == "subcommand") continue;
    const std::string flag = "--" + key;
    if (has_flag(args, flag)) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back(flag);
      continue;
    }
    if (value.is_null()) continue;
    args.push_back(flag);
    args.push_back(scalar_text(value, key));
  }
  return args;
}

void add_system_options(CLI::App* sub, SystemArgs& s, bool with_geometry = true) {
  if (with_geometry)
    sub->add_option("--geometry", s.geometry, "plane or sphere")->check(CLI::IsMember({"plane", "sphere"}));
  sub->add_option("--potential", s.potential, "coulomb or oscillator")->check(CLI::IsMember({"coulomb", "oscillator"}));
  sub->add_option("--m", s.m, "particle mass")->capture_default_str();
  sub->add_option("--k", s.k, "Coulomb strength");
  sub->add_option("--omega", s.omega, "oscillator frequency");
  if (with_geometry) sub->add_option("--lambda", s.lambda, "sphere curvature");
}

void add_range_options(CLI::App* sub, LevelRange& r) {
  sub->add_option("--n-min", r.n_min, "lowest principal number");
  sub->add_option("--n-max", r.n_max, "highest principal number");
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Klein-Gordon symmetry toolkit: exact operator identities and relativistic spectra", "kg_symm"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string output;
  app.add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--output", output, "write the report to this file instead of stdout");
  std::string config_path;
  app.add_option("--config", config_path, "JSON file whose keys mirror the flags");

  SpectrumConfig spectrum;
  auto* s_sub = app.add_subcommand("spectrum", "closed-form relativistic levels");
  add_system_options(s_sub, spectrum.system);
  add_range_options(s_sub, spectrum.range);

  AlgebraConfig algebra;
  auto* a_sub = app.add_subcommand("verify-algebra", "run an identity suite through the symbolic engine");
  a_sub->add_option("--system", algebra.system, "plane-coulomb, plane-oscillator, sphere-coulomb, sphere-oscillator")
      ->required();
  a_sub->add_flag("--numeric", algebra.numeric, "also evaluate every identity on wave packets");
  a_sub->add_flag("--dump", algebra.dump, "include canonical operator text");
  a_sub->add_option("--m-eff", algebra.m_eff)->capture_default_str();
  a_sub->add_option("--k", algebra.k)->capture_default_str();
  a_sub->add_option("--omega-eff", algebra.omega_eff)->capture_default_str();
  a_sub->add_option("--lambda", algebra.lambda)->capture_default_str();
  a_sub->add_option("--spacing", algebra.h, "lattice spacing h")->capture_default_str();
  a_sub->add_option("--order", algebra.order, "stencil order")->capture_default_str();
  a_sub->add_option("--threshold", algebra.threshold, "numeric confirmation threshold")->capture_default_str();

  RadialConfig radial;
  auto* r_sub = app.add_subcommand("radial", "self-consistent finite-difference levels against the closed forms");
  add_system_options(r_sub, radial.system);
  add_range_options(r_sub, radial.range);
  r_sub->add_option("--points", radial.points)->capture_default_str();
  r_sub->add_option("--tol", radial.tolerance, "self-consistency tolerance")->capture_default_str();

  LimitsConfig limits;
  auto* l_sub = app.add_subcommand("limits", "flat and nonrelativistic limit sweeps");
  add_system_options(l_sub, limits.system, false);
  add_range_options(l_sub, limits.range);

  MapConfig map;
  auto* m_sub = app.add_subcommand("map", "relativistic levels from a nonrelativistic spectrum");
  m_sub->add_option("--spectrum", map.spectrum, "catalog name");
  m_sub->add_flag("--list", map.list, "print the catalog");
  m_sub->add_option("--m", map.m)->capture_default_str();
  m_sub->add_option("--k", map.k)->capture_default_str();
  m_sub->add_option("--elasticity", map.elasticity, "oscillator elasticity m omega^2")->capture_default_str();
  m_sub->add_option("--lambda", map.lambda)->capture_default_str();
  add_range_options(m_sub, map.range);

  try {
    std::vector<std::string> args = merge_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "kg_symm: " << e.what() << "\n";
    return kInvalidConfig;
  } catch (const Error& e) {
    err << "kg_symm: " << e.what() << "\n";
    return kInvalidConfig;
  }

  int code = kOk;
  Report report;
  try {
    if (*s_sub) {
      report = cmd_spectrum(spectrum);
    } else if (*a_sub) {
      auto outcome = cmd_verify_algebra(algebra);
      report = std::move(outcome.report);
      if (!outcome.all_confirmed) code = kAlgebraFailure;
    } else if (*r_sub) {
      report = cmd_radial(radial);
    } else if (*l_sub) {
      report = cmd_limits(limits);
    } else {
      report = cmd_map(map);
    }
  } catch (const DomainError& e) {
    err << "kg_symm: invalid configuration: " << e.what() << "\n";
    return kInvalidConfig;
  } catch (const Error& e) {
    err << "kg_symm: solver failure: " << e.what() << "\n";
    return kSolverFailure;
  }

  const Format f = format == "tsv" ? Format::Tsv : Format::Json;
  if (output.empty()) {
    write_report(report, f, out);
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file) {
      err << "kg_symm: cannot write '" << output << "'\n";
      return kInvalidConfig;
    }
    write_report(report, f, file);
  }
  if (code == kAlgebraFailure) err << "kg_symm: some identities were neither verified nor confirmed\n";
  return code;
}

}  // namespace kgsymm::cli
