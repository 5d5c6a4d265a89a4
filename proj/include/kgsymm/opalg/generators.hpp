#pragma once

// Quasi-Hamiltonians and symmetry generators with formal parameters
// mt (effective mass), k (Coulomb strength), wt (effective frequency) and
// lam (curvature). On the sphere the momenta p_i are replaced by
//   pi_i = p_i + (lam/2) [x_i (x.p) + (p.x) x_i]
// and the kinetic term is (pi^2 + lam L^2) / (2 mt).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kgsymm/model.hpp"
#include "kgsymm/opalg/formula.hpp"
#include "kgsymm/opalg/operator_expr.hpp"

namespace kgsymm::opalg {

struct SymbolicSystem {
  model::Geometry geometry;
  model::Potential potential;

  static SymbolicSystem plane_coulomb() { return {model::Geometry::Flat, model::Potential::Coulomb}; }
  static SymbolicSystem plane_oscillator() { return {model::Geometry::Flat, model::Potential::Oscillator}; }
  static SymbolicSystem sphere_coulomb() { return {model::Geometry::Sphere, model::Potential::Coulomb}; }
  static SymbolicSystem sphere_oscillator() { return {model::Geometry::Sphere, model::Potential::Oscillator}; }
  /// "plane-coulomb", "plane-oscillator", "sphere-coulomb", "sphere-oscillator".
  static std::optional<SymbolicSystem> from_name(std::string_view name);
  std::string name() const;

  friend bool operator==(const SymbolicSystem&, const SymbolicSystem&) = default;
};

/// Names accepted by build() for this system, e.g. "L", "H", "R+", "pi1".
std::vector<std::string> generator_names(const SymbolicSystem& sys);

/// Canonical operator for a named generator. Throws DomainError for a
/// name the system does not define.
OperatorExpr build(const SymbolicSystem& sys, std::string_view name);

// Higgs structure constants. c1 and a1 contain the quasi-Hamiltonian and
// are therefore formulas in H; c3 and a3 are plain coefficients.
Coeff higgs_c3();
Formula higgs_c1(const OperatorExpr& h);
Coeff higgs_a3();
Formula higgs_a1(const OperatorExpr& h);

/// One operator identity lhs == rhs as printed in the source derivation.
struct IdentitySpec {
  std::string name;
  std::string relation;
  Formula lhs;
  Formula rhs;
  /// Operators in which to re-express lhs when the printed rhs is refuted.
  std::vector<std::pair<std::string, Formula>> fit_basis;
};

/// The full identity suite for a system (commutation with H, algebra
/// relations, Casimir combinations).
std::vector<IdentitySpec> identity_suite(const SymbolicSystem& sys);

/// Generator paired with its expected adjoint (itself, or its ladder partner).
struct AdjointCheck {
  std::string name;
  OperatorExpr op;
  OperatorExpr expected;
};
std::vector<AdjointCheck> adjoint_checks(const SymbolicSystem& sys);

/// Solves sum_i c_i basis_i == target exactly over the coefficient field.
/// Returns nullopt when target is not in the span.
std::optional<std::vector<Coeff>> fit_in_basis(const OperatorExpr& target, const std::vector<OperatorExpr>& basis);

}  // namespace kgsymm::opalg
