#pragma once

// Subcommand bodies. Each takes a validated configuration and returns the
// report to print; errors propagate as kgsymm::Error subclasses.

#include <optional>
#include <string>

#include "kgsymm/model.hpp"
#include "report.hpp"

namespace kgsymm::cli {

struct SystemArgs {
  std::string geometry = "plane";
  std::string potential = "coulomb";
  double m = 1.0;
  std::optional<double> k;
  std::optional<double> omega;
  std::optional<double> lambda;
};

/// Builds the SystemSpec, checking that exactly the parameters the
/// geometry and potential need are present. Throws DomainError.
model::SystemSpec make_system(const SystemArgs& a);

struct LevelRange {
  std::optional<int> n_min;
  std::optional<int> n_max;
};

struct SpectrumConfig {
  SystemArgs system;
  LevelRange range;
};
Report cmd_spectrum(const SpectrumConfig& cfg);

struct AlgebraConfig {
  std::string system;
  bool numeric = false;
  bool dump = false;
  double m_eff = 1.0;
  double k = 1.0;
  double omega_eff = 1.5;
  double lambda = 0.1;
  double h = 0.06;
  int order = 16;
  double threshold = 1e-6;
  /// Printed forms must miss by more than this to count as refuted.
  double refute = 1e-2;
};

struct AlgebraOutcome {
  Report report;
  bool all_confirmed;
};
AlgebraOutcome cmd_verify_algebra(const AlgebraConfig& cfg);

struct RadialConfig {
  SystemArgs system;
  LevelRange range;
  int points = 4000;
  double tolerance = 1e-10;
};
Report cmd_radial(const RadialConfig& cfg);

struct LimitsConfig {
  SystemArgs system;
  LevelRange range;
};
Report cmd_limits(const LimitsConfig& cfg);

struct MapConfig {
  std::string spectrum;
  bool list = false;
  double m = 1.0;
  double k = 0.5;
  double elasticity = 1.0;
  double lambda = 0.0;
  LevelRange range;
};
Report cmd_map(const MapConfig& cfg);

}  // namespace kgsymm::cli
