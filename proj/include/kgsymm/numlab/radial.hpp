#pragma once

// Radial eigenproblem of the effective Schrodinger equation and the
// self-consistent relativistic levels built on it.

#include <functional>
#include <vector>

#include "kgsymm/model.hpp"

namespace kgsymm::numlab {

/// Lowest eigenvalues of the symmetric tridiagonal matrix (diag, off) by
/// Sturm-sequence bisection, ascending. off has size diag.size() - 1.
std::vector<double> tridiagonal_lowest(const std::vector<double>& diag, const std::vector<double>& off, int count);

/// -(1/2m) (u'' - (l^2 - 1/4) u / r^2) + V u = E u with Dirichlet walls.
struct RadialProblem {
  double m_eff;
  int l;
  std::function<double(double)> potential;
  double r_max;
  /// Points on the coarsest grid; two refinements are added on top.
  int points = 4000;
};

/// Default outer radius for the radial_index-th level of angular number l.
double default_r_max(const model::SystemSpec& flat, double m_eff, int l, int radial_index);

struct RadialOptions {
  /// Relative disagreement allowed between successive Richardson values.
  double tolerance = 1e-6;
  /// Levels below this index are returned without the agreement check.
  int first_checked = 0;
};

/// Lowest `count` levels, Richardson-extrapolated over grids of M, 2M and
/// 4M cells. Throws ConvergenceError when the two extrapolants disagree.
std::vector<double> radial_eigenlevels(const RadialProblem& problem, int count, const RadialOptions& opt = {});

/// Principal number n of the level (l, n_r): 2 n_r + 2|l| + 1 (Coulomb) or 2 n_r + |l| (oscillator).
int principal_number(model::Potential p, int l, int radial_index);

struct SelfConsistentOptions {
  double tolerance = 1e-10;
  int max_iter = 200;
  int points = 4000;
};

struct SelfConsistentResult {
  model::SpectrumLine line;
  std::vector<double> history;
};

/// Fixed point of epsilon -> E(m_eff(epsilon)) + m with halved steps
/// whenever the update changes sign. Flat geometry only.
SelfConsistentResult self_consistent_spectrum(const model::SystemSpec& spec, int l, int radial_index,
                                              const SelfConsistentOptions& opt = {});

}  // namespace kgsymm::numlab
