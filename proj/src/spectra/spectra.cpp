#include "kgsymm/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "kgsymm/error.hpp"

namespace kgsymm::spectra {

using model::Geometry;
using model::Potential;
using model::QuantumNumbers;
using model::SpectrumLine;
using model::SystemSpec;

namespace {

std::string bracket_text(double lo, double hi) {
  std::ostringstream os;
  os.precision(17);
  os << "[" << lo << ", " << hi << "]";
  return os.str();
}

double scale_of(double x) { return std::max(1.0, std::abs(x)); }

}  // namespace

Root solve_bracketed(const ScalarFn& f, const RootBracket& b, const ScalarFn& df) {
  if (!(b.lo < b.hi)) throw DomainError("root bracket needs lo < hi, got " + bracket_text(b.lo, b.hi));
  if (!(b.tolerance > 0.0) || b.max_iter <= 0) throw DomainError("root bracket needs positive tolerance and iterations");

  double lo = b.lo, hi = b.hi;
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return {lo, 0.0, 0};
  if (fhi == 0.0) return {hi, 0.0, 0};
  if (std::isnan(flo) || std::isnan(fhi) || (flo > 0) == (fhi > 0))
    throw SolverError("no sign change on " + bracket_text(lo, hi));

  int it = 0;
  // coarse bisection
  while (hi - lo > 1e-6 * scale_of(0.5 * (lo + hi)) && it < b.max_iter) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    ++it;
    if (fm == 0.0) return {mid, 0.0, it};
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }

  auto slope = [&](double x) {
    if (df) return df(x);
    const double h = 1e-7 * scale_of(x);
    return (f(x + h) - f(x - h)) / (2.0 * h);
  };

  double x = 0.5 * (lo + hi);
  double fx = f(x);
  while (it < b.max_iter) {
    ++it;
    if (fx == 0.0) break;
    if ((fx > 0) == (flo > 0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
    }
    const double d = slope(x);
    double next = (d != 0.0 && std::isfinite(d)) ? x - fx / d : std::numeric_limits<double>::quiet_NaN();
    // Newton escaped the bracket: fall back to bisection.
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - x);
    x = next;
    fx = f(x);
    if (step <= b.tolerance * scale_of(x) || hi - lo <= b.tolerance * scale_of(x)) break;
  }
  if (!std::isfinite(fx)) throw SolverError("non-finite residual near " + bracket_text(lo, hi));
  return {x, std::abs(fx), it};
}

double level_equation(const SystemSpec& spec, const QuantumNumbers& qn, double E) {
  const double m = spec.mass();
  const double u = E + 2.0 * m;  // epsilon + m
  const double lam = spec.curvature();
  if (spec.potential() == Potential::Coulomb) {
    const double k = spec.coupling();
    const double nu = qn.n();
    return E + k * k * u / (nu * nu) - lam * qn.casimir() / u;
  }
  const double w = spec.omega();
  const double N = qn.n() + 1;
  return E - lam * N * N / u - N * std::sqrt(2.0 * m * w * w / u + lam * lam / (u * u));
}

SpectrumLine level_energy(const SystemSpec& spec, const QuantumNumbers& qn) {
  if (!qn.matches(spec.potential()))
    throw DomainError("quantum numbers do not belong to the " + spec.name() + " family");

  const double m = spec.mass();
  auto eq = [&](double E) { return level_equation(spec, qn, E); };
  double E = 0.0;

  if (spec.potential() == Potential::Coulomb) {
    const double k = spec.coupling();
    const double nu = qn.n();
    const double g = k * k / (nu * nu);
    const double a = 1.0 + g;
    // Larger root of a u^2 - 2 m u - lambda j(j+1) = 0 in u = E + 2m,
    // rewritten without the cancellation in u - 2m.
    const double q = spec.curvature() * qn.casimir();
    const double s = std::sqrt(m * m + a * q);
    E = (a * q / (s + m) - 2.0 * g * m) / a;
    if (q != 0.0) {
      // one Newton step on the exact equation tidies the last bits
      const double u = E + 2.0 * m;
      const double d = 1.0 + g + q / (u * u);
      E -= eq(E) / d;
    }
  } else {
    // The equation is strictly increasing in E on E > -2m and negative at 0.
    const double w = spec.omega();
    const double N = qn.n() + 1;
    const double lam = spec.curvature();
    const double hi = lam * N * N / (2.0 * m) + N * std::sqrt(w * w + lam * lam / (4.0 * m * m));
    if (hi == 0.0) {
      E = 0.0;
    } else {
      const Root r = solve_bracketed(eq, {0.0, hi * (1.0 + 1e-12) + 1e-300, 1e-15, 400});
      E = r.x;
    }
  }

  SpectrumLine line{qn, qn.degeneracy(), E + m, E, std::abs(eq(E)), false};
  line.suspect = line.epsilon <= 0.0;
  const double bound = 1e-12 * std::max(1.0, std::abs(line.epsilon));
  if (!(line.residual <= bound)) {
    std::ostringstream os;
    os.precision(6);
    os << "level residual " << line.residual << " above " << bound << " for " << spec.name();
    throw SolverError(os.str());
  }
  return line;
}

double uniform_map(const NonrelSpectrum& nonrel, double m, const QuantumNumbers& qn) {
  if (!(m > 0.0)) throw DomainError("uniform map needs m > 0");
  auto h = [&](double E) { return E - nonrel(0.5 * (E + 2.0 * m), qn); };
  const double floor = -2.0 * m * (1.0 - 1e-9);  // keeps the effective mass positive
  const double E0 = std::max(nonrel(m, qn), floor);
  const double h0 = h(E0);
  if (h0 == 0.0) return E0 + m;
  double span = std::max(std::abs(E0), 1e-6 * m);
  for (int k = 0; k < 80; ++k, span *= 2.0) {
    const double lo = std::max(E0 - span, floor);
    const double hi = E0 + span;
    const double hlo = h(lo), hhi = h(hi);
    RootBracket b{0, 0, 1e-15, 400};
    if (std::isfinite(hhi) && (hhi > 0) != (h0 > 0)) {
      b.lo = E0;
      b.hi = hi;
    } else if (std::isfinite(hlo) && (hlo > 0) != (h0 > 0)) {
      b.lo = lo;
      b.hi = E0;
    } else {
      continue;
    }
    return solve_bracketed(h, b).x + m;
  }
  throw SolverError("uniform map: no sign change in epsilon on " + bracket_text(floor + m, E0 + span + m));
}

NonrelSpectrum nonrel_spectrum(const SystemSpec& spec) {
  const double lam = spec.curvature();
  if (spec.potential() == Potential::Coulomb)
    return catalog_spectrum(lam == 0.0 ? "hydrogen-2d" : "higgs-coulomb", spec.coupling(), 0.0, lam);
  const double c = spec.mass() * spec.omega() * spec.omega();
  return catalog_spectrum(lam == 0.0 ? "oscillator-2d" : "higgs-oscillator", 0.0, c, lam);
}

std::vector<CatalogEntry> catalog() {
  return {
      {"hydrogen-2d", "-2 k^2 M / n^2", Potential::Coulomb},
      {"oscillator-2d", "(n+1) sqrt(c / M)", Potential::Oscillator},
      {"higgs-coulomb", "-2 k^2 M / (2j+1)^2 + lambda j(j+1) / (2M)", Potential::Coulomb},
      {"higgs-oscillator", "lambda (n+1)^2 / (2M) + (n+1) sqrt(c/M + lambda^2 / (4 M^2))", Potential::Oscillator},
      {"free", "0", Potential::Coulomb},
  };
}

NonrelSpectrum catalog_spectrum(const std::string& name, double k, double c, double lam) {
  if (name == "hydrogen-2d")
    return [k](double M, const QuantumNumbers& qn) {
      const double n = qn.n();
      return -2.0 * k * k * M / (n * n);
    };
  if (name == "oscillator-2d")
    return [c](double M, const QuantumNumbers& qn) { return (qn.n() + 1) * std::sqrt(c / M); };
  if (name == "higgs-coulomb")
    return [k, lam](double M, const QuantumNumbers& qn) {
      const double n = qn.n();
      return -2.0 * k * k * M / (n * n) + lam * qn.casimir() / (2.0 * M);
    };
  if (name == "higgs-oscillator")
    return [c, lam](double M, const QuantumNumbers& qn) {
      const double N = qn.n() + 1;
      return lam * N * N / (2.0 * M) + N * std::sqrt(c / M + lam * lam / (4.0 * M * M));
    };
  if (name == "free") return [](double, const QuantumNumbers&) { return 0.0; };
  throw DomainError("unknown spectrum '" + name + "'");
}

}  // namespace kgsymm::spectra
