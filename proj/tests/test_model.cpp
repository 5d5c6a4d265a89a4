#include "doctest.h"

#include <cmath>

#include "kgsymm/error.hpp"
#include "kgsymm/model.hpp"

using namespace kgsymm::model;

// Positive root of (e-1)^2 (e+1) = 2, computed with mpmath at 30 digits.
constexpr double kCubicRoot = 1.8392867552141611;

TEST_CASE("effective parameters") {
  const auto coul = SystemSpec::plane_coulomb(1.0, 0.5);
  auto p = effective_params(1.0, coul);
  CHECK(p.m_eff == 1.0);
  CHECK(p.E_eff == 0.0);
  CHECK_FALSE(p.omega_eff);

  p = effective_params(0.6, coul);
  CHECK(p.m_eff == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(p.E_eff == doctest::Approx(-0.4).epsilon(1e-15));

  const auto osc = SystemSpec::plane_oscillator(1.0, 1.0);
  p = effective_params(kCubicRoot, osc);
  CHECK(p.m_eff == doctest::Approx(1.4196433776070806).epsilon(1e-14));
  REQUIRE(p.omega_eff);
  CHECK(*p.omega_eff == doctest::Approx(0.8392867552141611).epsilon(1e-14));

  CHECK_THROWS_AS(effective_params(-1.0, coul), kgsymm::DomainError);
  CHECK_THROWS_AS(effective_params(-3.0, osc), kgsymm::DomainError);
}

TEST_CASE("round trip epsilon = E + m") {
  const auto spec = SystemSpec::sphere_coulomb(1.0, 0.3, 0.2);
  for (double eps : {0.6, 0.75, 1.0, 1.5, 2.0, -0.5, 0.999}) {
    const auto p = effective_params(eps, spec);
    CHECK(p.E_eff + spec.mass() == eps);
  }
}

TEST_CASE("nonrelativistic limit of the effective parameters") {
  const double m = 1e6;
  const auto spec = SystemSpec::plane_oscillator(m, 0.7);
  for (double shift : {-1.0, -0.3, 0.4, 1.0}) {
    const auto p = effective_params(m + shift, spec);
    CHECK(std::abs(p.m_eff / m - 1.0) < 1e-5);
    CHECK(std::abs(*p.omega_eff / 0.7 - 1.0) < 1e-5);
  }
}

TEST_CASE("system validation and accessors") {
  CHECK_THROWS_AS(SystemSpec::plane_coulomb(0.0, 1.0), kgsymm::DomainError);
  CHECK_THROWS_AS(SystemSpec::plane_coulomb(1.0, -1.0), kgsymm::DomainError);
  CHECK_THROWS_AS(SystemSpec::sphere_oscillator(1.0, 1.0, -0.1), kgsymm::DomainError);
  const auto s = SystemSpec::sphere_coulomb(2.0, 0.5, 0.3);
  CHECK(s.name() == "sphere-coulomb");
  CHECK(s.coupling() == 0.5);
  CHECK_THROWS_AS(s.omega(), kgsymm::DomainError);
  CHECK(s.potential_at(2.0) == doctest::Approx(-0.25));
  CHECK(s.flattened().geometry() == Geometry::Flat);
  CHECK(s.flattened().curvature() == 0.0);
  CHECK(SystemSpec::plane_oscillator(2.0, 3.0).potential_at(1.0) == doctest::Approx(9.0));
}

TEST_CASE("quantum numbers") {
  const auto c = QuantumNumbers::coulomb(2);
  CHECK(c.n() == 5);
  CHECK(c.degeneracy() == 5);
  CHECK(c.casimir() == 6.0);
  CHECK(c.matches(Potential::Coulomb));
  CHECK_FALSE(c.matches(Potential::Oscillator));

  const auto o = QuantumNumbers::oscillator(3);
  CHECK(o.n() == 3);
  CHECK(o.degeneracy() == 4);
  CHECK(o.casimir() == doctest::Approx(1.5 * 2.5));
  CHECK(QuantumNumbers::from_n(Potential::Coulomb, 3) == QuantumNumbers::coulomb(1));
  CHECK(QuantumNumbers::from_n(Potential::Oscillator, 0) == QuantumNumbers::oscillator(0));
  CHECK_THROWS_AS(QuantumNumbers::from_n(Potential::Coulomb, 2), kgsymm::DomainError);
  CHECK_THROWS_AS(QuantumNumbers::coulomb(-1), kgsymm::DomainError);
}
