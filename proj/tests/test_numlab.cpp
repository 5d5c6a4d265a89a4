#include "doctest.h"

#include <cmath>

#include "kgsymm/error.hpp"
#include "kgsymm/numlab/grid.hpp"
#include "kgsymm/numlab/radial.hpp"
#include "kgsymm/opalg/generators.hpp"
#include "kgsymm/spectra.hpp"

using namespace kgsymm;
using namespace kgsymm::numlab;
using opalg::BracketKind;
using opalg::Coeff;
using opalg::Formula;
using opalg::OperatorExpr;
using opalg::ParamValues;
using opalg::SymbolicSystem;

TEST_CASE("central difference weights") {
  const auto w1 = central_weights(1, 2);
  REQUIRE(w1.size() == 3);
  CHECK(w1[0] == doctest::Approx(-0.5));
  CHECK(w1[1] == doctest::Approx(0.0));
  CHECK(w1[2] == doctest::Approx(0.5));
  const auto w2 = central_weights(2, 4);
  REQUIRE(w2.size() == 5);
  CHECK(w2[0] == doctest::Approx(-1.0 / 12));
  CHECK(w2[1] == doctest::Approx(4.0 / 3));
  CHECK(w2[2] == doctest::Approx(-5.0 / 2));
  CHECK(central_weights(1, 8).size() == 9);
  CHECK(central_weights(3, 8).size() == 11);
  // exact on polynomials up to the order
  const auto w = central_weights(2, 8);
  double s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double x = static_cast<double>(i) - 4.0;
    s += w[i] * x * x * x * x;
  }
  CHECK(s == doctest::Approx(0.0).epsilon(1e-12));  // d2/dx2 x^4 at 0
}

TEST_CASE("grid avoids the origin") {
  const Grid2D g = Grid2D::around(0.0, 0.0, 0.1, 101);
  double rmin = 1e9;
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) rmin = std::min(rmin, std::hypot(g.x(i), g.y(j)));
  CHECK(rmin > 0.01);
  CHECK_THROWS_AS(Grid2D::around(0, 0, 0.1, 10, 7), DomainError);
}

TEST_CASE("multiplication operators act pointwise") {
  const Packet p{2.0, 1.0, 0.5};
  const Grid2D g = grid_for(p, 0.05);
  const Field psi = sample_packet(p, g);
  const Field out = apply_on_grid(OperatorExpr::x(1), psi, g, {});
  for (int i = 0; i < g.n; i += 17)
    for (int j = 0; j < g.n; j += 13) CHECK(std::abs(out[g.index(i, j)] - g.x(i) * psi[g.index(i, j)]) < 1e-15);
}

TEST_CASE("Weyl relation on the grid and its convergence order") {
  const Packet p{2.0, 1.0, 0.5};
  double prev = 0.0;
  for (double h : {0.2, 0.1, 0.05}) {
    const double r = bracket_residual_numeric(OperatorExpr::x(1), OperatorExpr::p(1), Formula::scalar(Coeff::i()),
                                              BracketKind::Commutator, {p}, {}, {h, 8});
    if (prev > 0.0 && r > 1e-10) CHECK(prev / r >= 128.0);
    prev = r;
  }
  CHECK(prev < 1e-8);
}

TEST_CASE("boundary mass is rejected") {
  const Packet p{0.0, 0.0, 1.0};
  const Grid2D g = Grid2D::around(0.0, 0.0, 0.1, 40);
  CHECK_THROWS_AS(apply_on_grid(OperatorExpr::p(1), sample_packet(p, g), g, {}), DomainError);
}

TEST_CASE("numeric brackets") {
  const ParamValues unit{1.0, 1.0, 1.0, 0.0};
  const auto pc = SymbolicSystem::plane_coulomb();
  const auto packets = default_packets();
  const OperatorExpr l = build(pc, "L"), h = build(pc, "H");
  CHECK(bracket_residual_numeric(l, h, {}, BracketKind::Commutator, packets, unit) < 1e-6);
  // [A, A] cancels exactly
  const OperatorExpr r1 = build(pc, "R1");
  CHECK(bracket_residual_numeric(r1, r1, {}, BracketKind::Commutator, packets, unit) == 0.0);
  // [R1,R2] = -2i H L/(mt k^2)
  const Formula rhs = Coeff(-2) * Coeff::i() * (Formula(h) * Formula(l));
  CHECK(bracket_residual_numeric(r1, build(pc, "R2"), rhs, BracketKind::Commutator, packets, unit) < 1e-6);
  // a wrong right-hand side is clearly visible
  CHECK(bracket_residual_numeric(r1, build(pc, "R2"), Coeff(-1) * rhs, BracketKind::Commutator, packets, unit) > 1e-2);

  // Higgs relation of the sphere oscillator
  const auto so = SymbolicSystem::sphere_oscillator();
  const ParamValues sp{1.0, 1.0, 1.0, 0.1};
  const OperatorExpr j3 = build(so, "J3");
  const Formula higgs = opalg::higgs_a3() * (Formula(j3) * j3 * j3) + opalg::higgs_a1(build(so, "H")) * j3;
  CHECK(bracket_residual_numeric(build(so, "J+"), build(so, "J-"), higgs, BracketKind::Commutator, packets, sp) <
        1e-6);
}

TEST_CASE("tridiagonal Sturm bisection") {
  // Discrete Laplacian: 2 - 2 cos(k pi / (n+1))
  const int n = 50;
  std::vector<double> d(n, 2.0), e(n - 1, -1.0);
  const auto ev = tridiagonal_lowest(d, e, 4);
  for (int k = 0; k < 4; ++k) CHECK(ev[k] == doctest::Approx(2.0 - 2.0 * std::cos((k + 1) * M_PI / (n + 1))).epsilon(1e-13));
  CHECK_THROWS_AS(tridiagonal_lowest(d, e, 0), DomainError);
  CHECK_THROWS_AS(tridiagonal_lowest(d, std::vector<double>(3), 1), DomainError);
}

TEST_CASE("radial eigenlevels") {
  const auto coul = model::SystemSpec::plane_coulomb(1.0, 1.0);
  RadialProblem pc{1.0, 0, [&](double r) { return coul.potential_at(r); }, default_r_max(coul, 1.0, 0, 1)};
  const auto ec = radial_eigenlevels(pc, 2);
  CHECK(ec[0] == doctest::Approx(-2.0).epsilon(1e-5));
  CHECK(ec[1] == doctest::Approx(-2.0 / 9.0).epsilon(1e-5));

  const auto osc = model::SystemSpec::plane_oscillator(1.0, 1.0);
  auto prob = [&](int l) {
    return RadialProblem{1.0, l, [&](double r) { return osc.potential_at(r); }, default_r_max(osc, 1.0, l, 1)};
  };
  const auto e0 = radial_eigenlevels(prob(0), 2);
  const auto e1 = radial_eigenlevels(prob(1), 1);
  const auto em1 = radial_eigenlevels(prob(-1), 1);
  CHECK(std::abs(e0[0] - 1.0) < 1e-6);
  CHECK(std::abs(e1[0] - 2.0) < 1e-6);
  CHECK(std::abs(em1[0] - 2.0) < 1e-6);
  CHECK(std::abs(e0[1] - 3.0) < 1e-6);

  CHECK_THROWS_AS(radial_eigenlevels({-1.0, 0, [](double) { return 0.0; }, 10.0}, 1), DomainError);
  // a grid far too coarse for the Coulomb cusp fails the refinement check
  RadialProblem coarse{1.0, 0, [&](double r) { return coul.potential_at(r); }, 400.0, 16};
  CHECK_THROWS_AS(radial_eigenlevels(coarse, 1, {1e-9}), ConvergenceError);
}

TEST_CASE("self-consistent levels") {
  const auto coul = model::SystemSpec::plane_coulomb(1.0, 0.5);
  const auto r = self_consistent_spectrum(coul, 0, 0);
  CHECK(r.line.epsilon == doctest::Approx(0.6).epsilon(1e-6));
  CHECK(r.line.qn == model::QuantumNumbers::coulomb(0));
  CHECK(r.history.size() >= 2);

  const auto osc = model::SystemSpec::plane_oscillator(1.0, 1.0);
  const auto o = self_consistent_spectrum(osc, 0, 0);
  CHECK(std::abs(o.line.epsilon - 1.8392867552141611) < 1e-6);

  // l = 1, n_r = 0 is the n = 3 level of the Coulomb problem
  const auto r3 = self_consistent_spectrum(coul, 1, 0);
  CHECK(r3.line.qn.n() == 3);
  CHECK(r3.line.epsilon == doctest::Approx(35.0 / 37.0).epsilon(1e-6));

  CHECK_THROWS_AS(self_consistent_spectrum(model::SystemSpec::sphere_coulomb(1, 0.5, 0.1), 0, 0), DomainError);
  CHECK_THROWS_AS(model::SystemSpec::plane_coulomb(1.0, 0.0), DomainError);
  SelfConsistentOptions tight;
  tight.max_iter = 2;
  CHECK_THROWS_AS(self_consistent_spectrum(coul, 0, 0, tight), ConvergenceError);
}

TEST_CASE("degeneracy of the numeric Coulomb multiplet") {
  const auto coul = model::SystemSpec::plane_coulomb(1.0, 0.5);
  const int j = 2;
  const double ref = self_consistent_spectrum(coul, 0, j).line.epsilon;
  for (int l = 1; l <= j; ++l) {
    const double e = self_consistent_spectrum(coul, l, j - l).line.epsilon;
    CHECK(std::abs(e - ref) / std::abs(ref) < 1e-5);
  }
}

TEST_CASE("highly excited s-states only check the requested level") {
  const auto coul = model::SystemSpec::plane_coulomb(1.0, 0.5);
  // n = 7, l = 0: the ground state on this wide grid is under-resolved
  const auto r = self_consistent_spectrum(coul, 0, 3);
  CHECK(r.line.epsilon == doctest::Approx(48.75 / 49.25).epsilon(1e-6));

  // an unstable fixed point leaves the physical branch at once
  CHECK_THROWS_AS(self_consistent_spectrum(model::SystemSpec::plane_coulomb(1.0, 1.5), 0, 0), SolverError);
}
