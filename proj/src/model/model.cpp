#include "kgsymm/model.hpp"

#include <cmath>

#include "kgsymm/error.hpp"

namespace kgsymm::model {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

SystemSpec::SystemSpec(Geometry g, Potential p, double mass, double strength, double curvature)
    : geometry_(g), potential_(p), mass_(mass), strength_(strength), curvature_(curvature) {
  require(std::isfinite(mass) && mass > 0.0, "mass must be positive");
  require(std::isfinite(strength), "potential strength must be finite");
  if (p == Potential::Coulomb)
    require(strength > 0.0, "Coulomb strength k must be positive");
  else
    require(strength >= 0.0, "oscillator frequency must be non-negative");
  require(std::isfinite(curvature) && curvature >= 0.0, "curvature must be non-negative");
  if (g == Geometry::Flat) require(curvature == 0.0, "flat geometry carries no curvature");
}

SystemSpec SystemSpec::plane_coulomb(double mass, double coupling) {
  return {Geometry::Flat, Potential::Coulomb, mass, coupling, 0.0};
}
SystemSpec SystemSpec::plane_oscillator(double mass, double omega) {
  return {Geometry::Flat, Potential::Oscillator, mass, omega, 0.0};
}
SystemSpec SystemSpec::sphere_coulomb(double mass, double coupling, double curvature) {
  return {Geometry::Sphere, Potential::Coulomb, mass, coupling, curvature};
}
SystemSpec SystemSpec::sphere_oscillator(double mass, double omega, double curvature) {
  return {Geometry::Sphere, Potential::Oscillator, mass, omega, curvature};
}

double SystemSpec::coupling() const {
  if (potential_ != Potential::Coulomb) throw DomainError("coupling requested for an oscillator system");
  return strength_;
}

double SystemSpec::omega() const {
  if (potential_ != Potential::Oscillator) throw DomainError("frequency requested for a Coulomb system");
  return strength_;
}

double SystemSpec::potential_at(double r) const {
  if (potential_ == Potential::Coulomb) return -strength_ / r;
  return 0.5 * mass_ * strength_ * strength_ * r * r;
}

std::string SystemSpec::name() const {
  std::string s = geometry_ == Geometry::Flat ? "plane-" : "sphere-";
  return s + (potential_ == Potential::Coulomb ? "coulomb" : "oscillator");
}

SystemSpec SystemSpec::flattened() const {
  return {Geometry::Flat, potential_, mass_, strength_, 0.0};
}

EffectiveParams effective_params(double epsilon, const SystemSpec& spec) {
  const double m = spec.mass();
  if (!std::isfinite(epsilon) || epsilon <= -m)
    throw DomainError("effective parameters need epsilon > -m");
  EffectiveParams out{0.5 * (epsilon + m), epsilon - m, std::nullopt};
  if (spec.potential() == Potential::Oscillator) {
    const double w = spec.omega();
    out.omega_eff = std::sqrt(m * w * w / out.m_eff);
  }
  return out;
}

QuantumNumbers QuantumNumbers::coulomb(int j) {
  if (j < 0) throw DomainError("Coulomb label j must be non-negative");
  return {Kind::CoulombJ, j};
}

QuantumNumbers QuantumNumbers::oscillator(int twice_s) {
  if (twice_s < 0) throw DomainError("oscillator label 2s must be non-negative");
  return {Kind::OscillatorS, twice_s};
}

QuantumNumbers QuantumNumbers::from_n(Potential p, int n) {
  if (p == Potential::Coulomb) {
    if (n < 1 || n % 2 == 0) throw DomainError("Coulomb n must be odd and positive");
    return coulomb((n - 1) / 2);
  }
  return oscillator(n);
}

int QuantumNumbers::n() const { return kind_ == Kind::CoulombJ ? 2 * label_ + 1 : label_; }

int QuantumNumbers::degeneracy() const { return label_ + (kind_ == Kind::CoulombJ ? label_ + 1 : 1); }

double QuantumNumbers::casimir() const {
  if (kind_ == Kind::CoulombJ) return double(label_) * (label_ + 1);
  const double s = 0.5 * label_;
  return s * (s + 1.0);
}

bool QuantumNumbers::matches(Potential p) const {
  return (p == Potential::Coulomb) == (kind_ == Kind::CoulombJ);
}

}  // namespace kgsymm::model
