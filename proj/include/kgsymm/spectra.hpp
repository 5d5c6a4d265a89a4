#pragma once

// Relativistic energy levels.
//
// Every level equation is solved for the effective energy E = epsilon - m
// rather than epsilon itself, so heavy particles (m ~ 1e6) keep full
// relative precision in the binding energy. Each system has a unique root
// on the physical branch epsilon > -m:
//
//   plane Coulomb       E = -2 k^2 m / (n^2 + k^2)
//   plane oscillator    E^2 (E + 2m) = 2 m omega^2 (n+1)^2
//   sphere Coulomb      E = -k^2 (E+2m)/nu^2 + lambda j(j+1)/(E+2m),  nu = 2j+1
//   sphere oscillator   E = lambda (n+1)^2/(E+2m) + (n+1) sqrt(2 m omega^2/(E+2m) + lambda^2/(E+2m)^2)

#include <functional>
#include <string>
#include <vector>

#include "kgsymm/model.hpp"

namespace kgsymm::spectra {

using ScalarFn = std::function<double(double)>;

struct RootBracket {
  double lo;
  double hi;
  double tolerance = 1e-12;
  int max_iter = 200;
};

struct Root {
  double x;
  /// |f(x)| at the returned point.
  double residual;
  int iterations;
};

/// Bisection down to a coarse width, then safeguarded Newton. The
/// derivative is approximated by central differences when df is empty.
/// Throws SolverError if f does not change sign on the bracket.
Root solve_bracketed(const ScalarFn& f, const RootBracket& bracket, const ScalarFn& df = {});

/// Signed residual of the level equation in the form E - rhs(E).
double level_equation(const model::SystemSpec& spec, const model::QuantumNumbers& qn, double E);

/// The physical level for the given multiplet label.
model::SpectrumLine level_energy(const model::SystemSpec& spec, const model::QuantumNumbers& qn);

/// Nonrelativistic level as a function of the (effective) mass.
using NonrelSpectrum = std::function<double(double mass, const model::QuantumNumbers& qn)>;

/// Solves epsilon - m = nonrel((epsilon + m)/2, qn) for epsilon by an
/// expanding scan around the nonrelativistic estimate.
double uniform_map(const NonrelSpectrum& nonrel, double m, const model::QuantumNumbers& qn);

/// Closed-form Schrodinger spectrum of the same system, with the oscillator
/// written through the fixed elasticity c = m omega^2.
NonrelSpectrum nonrel_spectrum(const model::SystemSpec& spec);

/// Catalog entry usable without a SystemSpec (CLI `map`).
struct CatalogEntry {
  std::string name;
  std::string formula;
  model::Potential family;
};
std::vector<CatalogEntry> catalog();
/// Looks up a catalog entry by name and binds its parameters.
/// Throws DomainError for an unknown name.
NonrelSpectrum catalog_spectrum(const std::string& name, double coupling, double elasticity, double curvature);

}  // namespace kgsymm::spectra
