#include "kgsymm/numlab/radial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "kgsymm/error.hpp"
#include "kgsymm/spectra.hpp"

namespace kgsymm::numlab {

using model::Potential;
using model::SystemSpec;

namespace {

// Number of eigenvalues strictly below x.
int sturm_count(const std::vector<double>& d, const std::vector<double>& e2, double x) {
  int count = 0;
  double q = d[0] - x;
  if (q < 0) ++count;
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (q == 0.0) q = 1e-300;
    q = d[i] - x - e2[i - 1] / q;
    if (q < 0) ++count;
  }
  return count;
}

std::vector<double> levels_on_grid(const RadialProblem& p, int cells, int count) {
  // Flux form for R(r) = u(r)/sqrt(r) on cell centres r_i = (i - 1/2) h with
  // the wall at r_max; r_{1/2} = 0 removes the inner boundary condition.
  const double h = p.r_max / (cells + 0.5);
  const double t = 1.0 / (2.0 * p.m_eff * h * h);
  const double l2 = static_cast<double>(p.l) * p.l;
  std::vector<double> d(cells), e(cells - 1);
  for (int i = 0; i < cells; ++i) {
    const double r = (i + 0.5) * h;
    const double rm = i * h, rp = (i + 1) * h;
    d[i] = t * (rm + rp) / r + l2 / (2.0 * p.m_eff * r * r) + p.potential(r);
    if (i + 1 < cells) e[i] = -t * rp / std::sqrt(r * (r + h));
  }
  return tridiagonal_lowest(d, e, count);
}

}  // namespace

std::vector<double> tridiagonal_lowest(const std::vector<double>& d, const std::vector<double>& e, int count) {
  const std::size_t n = d.size();
  if (n == 0 || e.size() + 1 != n) throw DomainError("tridiagonal: off-diagonal must have n-1 entries");
  if (count < 1 || static_cast<std::size_t>(count) > n) throw DomainError("tridiagonal: bad eigenvalue count");

  std::vector<double> e2(e.size());
  double lo = d[0], hi = d[0];
  for (std::size_t i = 0; i < n; ++i) {
    const double left = i > 0 ? std::abs(e[i - 1]) : 0.0;
    const double right = i < e.size() ? std::abs(e[i]) : 0.0;
    lo = std::min(lo, d[i] - left - right);
    hi = std::max(hi, d[i] + left + right);
    if (i < e.size()) e2[i] = e[i] * e[i];
  }
  const double span = std::max(std::abs(lo), std::abs(hi));
  std::vector<double> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    double a = out.empty() ? lo : out.back() - 1e-12 * span, b = hi;
    for (int it = 0; it < 200 && b - a > 4e-16 * std::max(std::abs(a), std::abs(b)); ++it) {
      const double mid = 0.5 * (a + b);
      if (mid == a || mid == b) break;
      if (sturm_count(d, e2, mid) > k)
        b = mid;
      else
        a = mid;
    }
    out.push_back(0.5 * (a + b));
  }
  return out;
}

double default_r_max(const SystemSpec& flat, double m_eff, int l, int radial_index) {
  const int n = principal_number(flat.potential(), l, radial_index);
  if (flat.potential() == Potential::Coulomb) {
    const double k = flat.coupling();
    const double kappa = 2.0 * m_eff * k / n;
    return std::max(60.0 / (m_eff * k), (40.0 + 4.0 * n) / kappa);
  }
  const double w = std::sqrt(flat.mass() * flat.omega() * flat.omega() / m_eff);
  const double turning = std::sqrt(2.0 * (n + 1) / (m_eff * w));
  return turning + 12.0 / std::sqrt(m_eff * w);
}

std::vector<double> radial_eigenlevels(const RadialProblem& p, int count, const RadialOptions& opt) {
  if (!(p.m_eff > 0.0)) throw DomainError("radial problem needs m_eff > 0");
  if (!(p.r_max > 0.0) || p.points < 16) throw DomainError("radial problem needs r_max > 0 and enough points");
  const auto e1 = levels_on_grid(p, p.points, count);
  const auto e2 = levels_on_grid(p, 2 * p.points, count);
  const auto e4 = levels_on_grid(p, 4 * p.points, count);
  std::vector<double> out(count);
  for (int k = 0; k < count; ++k) {
    const double r1 = (4.0 * e2[k] - e1[k]) / 3.0;
    const double r2 = (4.0 * e4[k] - e2[k]) / 3.0;
    const double est = std::abs(r2 - r1);
    if (k >= opt.first_checked && est > opt.tolerance * std::max(1.0, std::abs(r2))) {
      std::ostringstream os;
      os.precision(12);
      os << "radial level " << k << " (l=" << p.l << ") not converged: Richardson values " << r1 << " and " << r2
         << " differ by " << est;
      throw ConvergenceError(os.str());
    }
    out[k] = r2;
  }
  return out;
}

int principal_number(Potential p, int l, int radial_index) {
  if (radial_index < 0) throw DomainError("radial index must be non-negative");
  const int al = std::abs(l);
  return p == Potential::Coulomb ? 2 * radial_index + 2 * al + 1 : 2 * radial_index + al;
}

SelfConsistentResult self_consistent_spectrum(const SystemSpec& spec, int l, int radial_index,
                                              const SelfConsistentOptions& opt) {
  if (spec.geometry() != model::Geometry::Flat) throw DomainError("self-consistent spectrum needs a flat system");
  const double m = spec.mass();
  const int n = principal_number(spec.potential(), l, radial_index);
  const auto qn = model::QuantumNumbers::from_n(spec.potential(), n);

  SelfConsistentResult res{{qn, qn.degeneracy(), 0.0, 0.0, 0.0, false}, {}};
  double eps = m + spectra::nonrel_spectrum(spec)(m, qn);
  if (eps <= -m) eps = 0.5 * m;
  res.history.push_back(eps);
  double last_step = 0.0;
  for (int it = 0; it < opt.max_iter; ++it) {
    const auto eff = model::effective_params(eps, spec);
    RadialProblem prob{eff.m_eff, l, [&spec](double r) { return spec.potential_at(r); },
                       default_r_max(spec, eff.m_eff, l, radial_index), opt.points};
    RadialOptions ropt;
    ropt.first_checked = radial_index;
    const double E = radial_eigenlevels(prob, radial_index + 1, ropt).back();
    if (spec.potential() == Potential::Coulomb && E >= 0.0)
      throw SolverError("no bound state: radial level " + std::to_string(E) + " is not negative");
    double step = (E + m) - eps;
    // sign alternation means the map overshoots; take half a step
    if (step * last_step < 0.0) step *= 0.5;
    eps += step;
    last_step = step;
    res.history.push_back(eps);
    if (eps <= -m) {
      std::ostringstream os;
      os.precision(15);
      os << "self-consistent iterate " << eps << " left the branch epsilon > -m after " << it + 1 << " steps";
      throw SolverError(os.str());
    }
    if (std::abs(step) < opt.tolerance * std::max(1.0, std::abs(eps))) {
      res.line.epsilon = eps;
      res.line.E = eps - m;
      res.line.residual = std::abs(step);
      res.line.suspect = eps <= 0.0;
      return res;
    }
  }
  std::ostringstream os;
  os.precision(15);
  os << "self-consistent iteration did not converge in " << opt.max_iter << " steps; last iterates:";
  for (std::size_t k = res.history.size() > 5 ? res.history.size() - 5 : 0; k < res.history.size(); ++k)
    os << ' ' << res.history[k];
  throw ConvergenceError(os.str());
}

}  // namespace kgsymm::numlab
