#pragma once

// Domain types shared by the symbolic, spectral and numerical layers.
//
// Conventions: hbar = c = 1, equal scalar and vector potentials
// V_s = V_v = V(r)/2, and the substitution
//   m_eff = (epsilon + m) / 2,   E = epsilon - m,
// which turns the Klein-Gordon equation into a Schrodinger-like problem
// with an energy-dependent mass.

#include <optional>
#include <string>

namespace kgsymm::model {

enum class Geometry { Flat, Sphere };
enum class Potential { Coulomb, Oscillator };

/// A physical system: geometry, potential family and particle mass.
///
/// Construct through the named factories; they enforce the parameter
/// domain. Curvature is only meaningful for the sphere, the coupling only
/// for Coulomb and the frequency only for the oscillator.
class SystemSpec {
 public:
  static SystemSpec plane_coulomb(double mass, double coupling);
  static SystemSpec plane_oscillator(double mass, double omega);
  static SystemSpec sphere_coulomb(double mass, double coupling, double curvature);
  static SystemSpec sphere_oscillator(double mass, double omega, double curvature);

  Geometry geometry() const { return geometry_; }
  Potential potential() const { return potential_; }
  double mass() const { return mass_; }
  /// Curvature of the sphere; 0 for the flat plane.
  double curvature() const { return curvature_; }
  /// Coulomb strength k in V(r) = -k/r. Throws for oscillator systems.
  double coupling() const;
  /// Oscillator frequency in V(r) = m omega^2 r^2 / 2. Throws for Coulomb systems.
  double omega() const;

  /// Potential V(r) at radius r > 0.
  double potential_at(double r) const;

  /// e.g. "plane-coulomb", "sphere-oscillator".
  std::string name() const;

  /// The same potential on the flat plane.
  SystemSpec flattened() const;

 private:
  SystemSpec(Geometry g, Potential p, double mass, double strength, double curvature);

  Geometry geometry_;
  Potential potential_;
  double mass_;
  double strength_;
  double curvature_;
};

struct EffectiveParams {
  double m_eff;
  double E_eff;
  std::optional<double> omega_eff;
};

/// m_eff = (epsilon+m)/2, E = epsilon-m and, for oscillators,
/// omega_eff = sqrt(m omega^2 / m_eff). Rejects epsilon <= -m.
EffectiveParams effective_params(double epsilon, const SystemSpec& spec);

/// Good quantum number labelling a multiplet.
///
/// Coulomb levels carry the SO(3) label j (n = 2j+1); oscillator levels
/// carry 2s (n = 2s), so half-integer s is representable exactly.
class QuantumNumbers {
 public:
  enum class Kind { CoulombJ, OscillatorS };

  static QuantumNumbers coulomb(int j);
  static QuantumNumbers oscillator(int twice_s);
  /// Level with principal number n for the given potential family.
  static QuantumNumbers from_n(Potential p, int n);

  Kind kind() const { return kind_; }
  /// j for Coulomb, 2s for the oscillator.
  int label() const { return label_; }
  int n() const;
  /// Dimension of the multiplet: 2j+1 or 2s+1.
  int degeneracy() const;
  /// Casimir eigenvalue j(j+1) or s(s+1).
  double casimir() const;

  bool matches(Potential p) const;

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;

 private:
  QuantumNumbers(Kind k, int label) : kind_(k), label_(label) {}
  Kind kind_;
  int label_;
};

struct SpectrumLine {
  QuantumNumbers qn;
  int degeneracy;
  double epsilon;
  double E;
  double residual;
  /// Set when the algebraic root is non-positive (Coulomb with k >= n).
  bool suspect = false;
};

}  // namespace kgsymm::model
