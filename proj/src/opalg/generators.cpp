#include "kgsymm/opalg/generators.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "kgsymm/error.hpp"

namespace kgsymm::opalg {

namespace {

using model::Geometry;
using model::Potential;

Coeff mt(int e = 1) { return Coeff::param(Param::MassEff, e); }
Coeff kc(int e = 1) { return Coeff::param(Param::Coupling, e); }
Coeff wt(int e = 1) { return Coeff::param(Param::OmegaEff, e); }
Coeff lam(int e = 1) { return Coeff::param(Param::Curvature, e); }
Coeff half() { return Coeff::frac(1, 2); }

OperatorExpr X(int i) { return OperatorExpr::x(i); }
OperatorExpr P(int i) { return OperatorExpr::p(i); }

OperatorExpr angular_momentum() { return X(1) * P(2) - X(2) * P(1); }

OperatorExpr sphere_momentum(int i) {
  const OperatorExpr xp = X(1) * P(1) + X(2) * P(2);
  const OperatorExpr px = P(1) * X(1) + P(2) * X(2);
  return P(i) + (lam() * half()) * (X(i) * xp + px * X(i));
}

// Kinetic momenta: p_i in the plane, pi_i on the sphere.
OperatorExpr kinetic_momentum(const SymbolicSystem& sys, int i) {
  return sys.geometry == Geometry::Flat ? P(i) : sphere_momentum(i);
}

OperatorExpr quasi_hamiltonian(const SymbolicSystem& sys) {
  const OperatorExpr k1 = kinetic_momentum(sys, 1);
  const OperatorExpr k2 = kinetic_momentum(sys, 2);
  OperatorExpr kin = k1 * k1 + k2 * k2;
  if (sys.geometry == Geometry::Sphere) kin += lam() * angular_momentum().pow(2);
  kin = (half() * mt(-1)) * kin;
  if (sys.potential == Potential::Coulomb) return kin - kc() * OperatorExpr::r_pow(-1);
  return kin + (half() * mt() * wt(2)) * (X(1) * X(1) + X(2) * X(2));
}

// Runge-Lenz-type vector, symmetrized with the kinetic momenta.
OperatorExpr runge_lenz(const SymbolicSystem& sys, int i) {
  const OperatorExpr l = angular_momentum();
  const Coeff pre = half() * mt(-1) * kc(-1);
  const OperatorExpr rinv = OperatorExpr::r_pow(-1);
  if (i == 1) {
    const OperatorExpr k2 = kinetic_momentum(sys, 2);
    return pre * (l * k2 + k2 * l) - X(1) * rinv;
  }
  const OperatorExpr k1 = kinetic_momentum(sys, 1);
  return (-pre) * (l * k1 + k1 * l) - X(2) * rinv;
}

// Second-order tensors s1, s2 of the oscillator (plane: pi -> p).
OperatorExpr oscillator_tensor(const SymbolicSystem& sys, int i) {
  const OperatorExpr k1 = kinetic_momentum(sys, 1);
  const OperatorExpr k2 = kinetic_momentum(sys, 2);
  const Coeff inv = mt(-1) * wt(-1);
  const Coeff dir = mt() * wt();
  if (i == 1) return (half() * inv) * (k1 * k2 + k2 * k1) + dir * (X(1) * X(2));
  return (half() * inv) * (k1 * k1 - k2 * k2) + (half() * dir) * (X(1) * X(1) - X(2) * X(2));
}

bool is_coulomb(const SymbolicSystem& s) { return s.potential == Potential::Coulomb; }
bool is_sphere(const SymbolicSystem& s) { return s.geometry == Geometry::Sphere; }

}  // namespace

std::optional<SymbolicSystem> SymbolicSystem::from_name(std::string_view name) {
  for (auto s : {plane_coulomb(), plane_oscillator(), sphere_coulomb(), sphere_oscillator()})
    if (s.name() == name) return s;
  return std::nullopt;
}

std::string SymbolicSystem::name() const {
  return std::string(is_sphere(*this) ? "sphere-" : "plane-") + (is_coulomb(*this) ? "coulomb" : "oscillator");
}

std::vector<std::string> generator_names(const SymbolicSystem& sys) {
  std::vector<std::string> names{"x1", "x2", "p1", "p2", "L", "H"};
  if (is_sphere(sys)) names.insert(names.end(), {"pi1", "pi2"});
  if (is_coulomb(sys)) {
    names.insert(names.end(), {"R1", "R2", "R+", "R-"});
  } else if (is_sphere(sys)) {
    names.insert(names.end(), {"s1", "s2", "J+", "J-", "J3"});
  } else {
    names.insert(names.end(), {"J1", "J2", "J3"});
  }
  return names;
}

OperatorExpr build(const SymbolicSystem& sys, std::string_view name) {
  const auto names = generator_names(sys);
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw DomainError("unknown generator '" + std::string(name) + "' for " + sys.name());

  if (name == "x1") return X(1);
  if (name == "x2") return X(2);
  if (name == "p1") return P(1);
  if (name == "p2") return P(2);
  if (name == "L") return angular_momentum();
  if (name == "H") return quasi_hamiltonian(sys);
  if (name == "pi1") return sphere_momentum(1);
  if (name == "pi2") return sphere_momentum(2);
  if (name == "R1") return runge_lenz(sys, 1);
  if (name == "R2") return runge_lenz(sys, 2);
  if (name == "R+") return runge_lenz(sys, 1) + Coeff::i() * runge_lenz(sys, 2);
  if (name == "R-") return runge_lenz(sys, 1) - Coeff::i() * runge_lenz(sys, 2);
  if (name == "s1") return oscillator_tensor(sys, 1);
  if (name == "s2") return oscillator_tensor(sys, 2);
  if (name == "J+") return half() * (oscillator_tensor(sys, 2) + Coeff::i() * oscillator_tensor(sys, 1));
  if (name == "J-") return half() * (oscillator_tensor(sys, 2) - Coeff::i() * oscillator_tensor(sys, 1));
  if (name == "J1") return half() * oscillator_tensor(sys, 1);
  if (name == "J2" || name == "J3") {
    if (name == "J3" && !is_sphere(sys)) return half() * oscillator_tensor(sys, 2);
    return half() * angular_momentum();
  }
  throw DomainError("unhandled generator " + std::string(name));
}

Coeff higgs_c3() { return Coeff(4) * lam() * mt(-2) * kc(-2); }

Formula higgs_c1(const OperatorExpr& h) {
  return Coeff(-4) * mt(-1) * kc(-2) * Formula(h) + Formula::scalar(half() * lam() * mt(-2) * kc(-2));
}

Coeff higgs_a3() { return Coeff(-4) * lam(2) * mt(-2) * wt(-2); }

Formula higgs_a1(const OperatorExpr& h) {
  return Formula::scalar(Coeff(2) - half() * lam(2) * mt(-2) * wt(-2)) +
         Coeff(2) * lam() * mt(-1) * wt(-2) * Formula(h);
}

std::vector<IdentitySpec> identity_suite(const SymbolicSystem& sys) {
  const Formula h = build(sys, "H");
  const Formula l = build(sys, "L");
  const Formula one = Formula::scalar(1);
  const Formula zero;
  const Coeff i = Coeff::i();
  std::vector<IdentitySpec> out;

  if (sys == SymbolicSystem::plane_coulomb()) {
    const Formula r1 = build(sys, "R1");
    const Formula r2 = build(sys, "R2");
    const Coeff g = mt(-1) * kc(-2);
    out.push_back({"[L,H]", "[L,H] = 0", commutator(l, h), zero, {}});
    out.push_back({"[R1,H]", "[R1,H] = 0", commutator(r1, h), zero, {}});
    out.push_back({"[R2,H]", "[R2,H] = 0", commutator(r2, h), zero, {}});
    out.push_back({"[L,R1]", "[L,R1] = i R2", commutator(l, r1), i * r2, {}});
    out.push_back({"[L,R2]", "[L,R2] = -i R1", commutator(l, r2), (-i) * r1, {}});
    out.push_back({"[R1,R2]", "[R1,R2] = -2i H L/(mt k^2)", commutator(r1, r2), Coeff(-2) * i * g * (h * l),
                   {{"H L", h * l}, {"L", l}}});
    out.push_back({"R1^2+R2^2", "R1^2 + R2^2 = (2H/(mt k^2))(L^2 + 1/4) + 1", r1 * r1 + r2 * r2,
                   Coeff(2) * g * (h * l * l) + half() * g * h + one,
                   {{"1", one}, {"H", h}, {"L^2", l * l}, {"H L^2", h * l * l}}});
    return out;
  }

  if (sys == SymbolicSystem::plane_oscillator()) {
    const Formula j1 = build(sys, "J1");
    const Formula j2 = build(sys, "J2");
    const Formula j3 = build(sys, "J3");
    out.push_back({"[J1,H]", "[J1,H] = 0", commutator(j1, h), zero, {}});
    out.push_back({"[J2,H]", "[J2,H] = 0", commutator(j2, h), zero, {}});
    out.push_back({"[J3,H]", "[J3,H] = 0", commutator(j3, h), zero, {}});
    out.push_back({"[J1,J2]", "[J1,J2] = i J3", commutator(j1, j2), i * j3, {}});
    out.push_back({"[J2,J3]", "[J2,J3] = i J1", commutator(j2, j3), i * j1, {}});
    out.push_back({"[J3,J1]", "[J3,J1] = i J2", commutator(j3, j1), i * j2, {}});
    out.push_back({"Casimir", "J1^2 + J2^2 + J3^2 = ((H/wt)^2 - 1)/4", j1 * j1 + j2 * j2 + j3 * j3,
                   Coeff::frac(1, 4) * wt(-2) * (h * h) - Formula::scalar(Coeff::frac(1, 4)),
                   {{"1", one}, {"H", h}, {"H^2", h * h}}});
    return out;
  }

  if (sys == SymbolicSystem::sphere_coulomb()) {
    const Formula r1 = build(sys, "R1");
    const Formula r2 = build(sys, "R2");
    const Formula rp = build(sys, "R+");
    const Formula rm = build(sys, "R-");
    const Coeff g = mt(-1) * kc(-2);
    const Coeff g2 = mt(-2) * kc(-2);
    const Formula c1 = higgs_c1(h.expand());
    const Coeff c3 = higgs_c3();
    const Formula l2 = l * l;
    const Formula l3 = l * l * l;
    const Formula l4 = l * l * l * l;
    const std::vector<std::pair<std::string, Formula>> even_basis{
        {"1", one}, {"H", h}, {"L^2", l2}, {"H L^2", h * l2}, {"L^4", l4}, {"H^2", h * h}};
    out.push_back({"[L,H]", "[L,H] = 0", commutator(l, h), zero, {}});
    out.push_back({"[R1,H]", "[R1,H] = 0", commutator(r1, h), zero, {}});
    out.push_back({"[R2,H]", "[R2,H] = 0", commutator(r2, h), zero, {}});
    out.push_back({"[L,R+]", "[L,R+] = R+", commutator(l, rp), rp, {}});
    out.push_back({"[L,R-]", "[L,R-] = -R-", commutator(l, rm), Coeff(-1) * rm, {}});
    out.push_back({"[R+,R-]", "[R+,R-] = c3 L^3 + c1 L", commutator(rp, rm), c3 * l3 + c1 * l,
                   {{"L", l}, {"H L", h * l}, {"L^3", l3}}});
    out.push_back({"{R+,R-}", "{R+,R-} = 2 + H/(mt k^2) + (8 mt H - 5 lam) L^2/(2 mt^2 k^2) - 2 lam L^4/(mt^2 k^2)",
                   anticommutator(rp, rm),
                   Formula::scalar(2) + g * h + Coeff(4) * g * (h * l2) -
                       Coeff::frac(5, 2) * lam() * g2 * l2 - Coeff(2) * lam() * g2 * l4,
                   even_basis});
    out.push_back({"Casimir", "{R+,R-} + (c1 + c3/2) L^2 + (c3/2) L^4 = 2 + H/(mt k^2)",
                   anticommutator(rp, rm) + (c1 + Formula::scalar(half() * c3)) * l2 + (half() * c3) * l4,
                   Formula::scalar(2) + g * h, even_basis});
    return out;
  }

  // sphere oscillator
  const Formula s1 = build(sys, "s1");
  const Formula s2 = build(sys, "s2");
  const Formula jp = build(sys, "J+");
  const Formula jm = build(sys, "J-");
  const Formula j3 = build(sys, "J3");
  const Formula a1 = higgs_a1(h.expand());
  const Coeff a3 = higgs_a3();
  const Formula j32 = j3 * j3;
  const Formula j34 = j32 * j32;
  const Coeff q = lam(2) * mt(-2) * wt(-2);  // lam^2 / (mt^2 wt^2)
  const std::vector<std::pair<std::string, Formula>> even_basis{
      {"1", one}, {"H", h}, {"H^2", h * h}, {"J3^2", j32}, {"H J3^2", h * j32}, {"J3^4", j34}};
  out.push_back({"[L,H]", "[L,H] = 0", commutator(l, h), zero, {}});
  out.push_back({"[s1,H]", "[s1,H] = 0", commutator(s1, h), zero, {}});
  out.push_back({"[s2,H]", "[s2,H] = 0", commutator(s2, h), zero, {}});
  out.push_back({"[J3,J+]", "[J3,J+] = J+", commutator(j3, jp), jp, {}});
  out.push_back({"[J3,J-]", "[J3,J-] = -J-", commutator(j3, jm), Coeff(-1) * jm, {}});
  out.push_back({"[J+,J-]", "[J+,J-] = a3 J3^3 + a1 J3", commutator(jp, jm), a3 * (j32 * j3) + a1 * j3,
                 {{"J3", j3}, {"H J3", h * j3}, {"J3^3", j32 * j3}}});
  // Printed form, kept verbatim including the J3^2 coefficients.
  out.push_back({"{J+,J-}",
                 "{J+,J-} = 2 lam^2/(mt^2 wt^2) J3^4 + (-2 lam H/mt - 2 + (5/2)(lam^2/mt^2) wt^2) J3^2 "
                 "+ (H^2/(2 wt^2) - 1/2 - lam H/(2 mt wt^2))",
                 anticommutator(jp, jm),
                 Coeff(2) * q * j34 +
                     (Coeff(-2) * lam() * mt(-1) * h + Formula::scalar(Coeff(-2) + Coeff::frac(5, 2) * lam(2) * mt(-2) * wt(2))) * j32 +
                     half() * wt(-2) * (h * h) - Formula::scalar(half()) - half() * lam() * mt(-1) * wt(-2) * h,
                 even_basis});
  out.push_back({"Casimir",
                 "{J+,J-} + (a1 + a3/2) J3^2 + (a3/2) J3^4 = H^2/(2 wt^2) - 1/2 - lam H/(2 mt wt^2)",
                 anticommutator(jp, jm) + (a1 + Formula::scalar(half() * a3)) * j32 + (half() * a3) * j34,
                 half() * wt(-2) * (h * h) - Formula::scalar(half()) - half() * lam() * mt(-1) * wt(-2) * h,
                 even_basis});
  return out;
}

std::vector<AdjointCheck> adjoint_checks(const SymbolicSystem& sys) {
  std::vector<AdjointCheck> out;
  auto self = [&](const char* n) {
    OperatorExpr g = build(sys, n);
    out.push_back({n, g, g});
  };
  auto pair = [&](const char* a, const char* b) { out.push_back({a, build(sys, a), build(sys, b)}); };
  self("L");
  self("H");
  if (is_sphere(sys)) {
    self("pi1");
    self("pi2");
  }
  if (is_coulomb(sys)) {
    self("R1");
    self("R2");
    pair("R+", "R-");
    pair("R-", "R+");
  } else if (is_sphere(sys)) {
    self("s1");
    self("s2");
    self("J3");
    pair("J+", "J-");
    pair("J-", "J+");
  } else {
    self("J1");
    self("J2");
    self("J3");
  }
  return out;
}

std::optional<std::vector<Coeff>> fit_in_basis(const OperatorExpr& target, const std::vector<OperatorExpr>& basis) {
  const std::size_t n = basis.size();
  // Key: (momentum, parity of r, x-monomial) at a common rho power per (momentum, parity).
  using Slot = std::pair<PMono, int>;
  std::map<Slot, int> power;
  auto scan = [&](const OperatorExpr& op) {
    for (const auto& [k, h] : op.components()) {
      int& a = power[{k, 0}];
      a = std::max(a, h.even().rho_power);
      int& b = power[{k, 1}];
      b = std::max(b, h.odd().rho_power);
    }
  };
  scan(target);
  for (const auto& b : basis) scan(b);

  using Key = std::tuple<PMono, int, XMono>;
  std::map<Key, std::vector<Coeff>> rows;
  auto spread = [&](const OperatorExpr& op, std::size_t col) {
    for (const auto& [k, h] : op.components()) {
      for (int parity = 0; parity < 2; ++parity) {
        const RhoFraction& part = parity == 0 ? h.even() : h.odd();
        if (part.is_zero()) continue;
        const XPoly numer = part.numer_at(power[{k, parity}]);
        for (const auto& [m, c] : numer.terms()) {
          auto& row = rows[{k, parity, m}];
          if (row.empty()) row.resize(n + 1);
          row[col] += c;
        }
      }
    }
  };
  for (std::size_t c = 0; c < n; ++c) spread(basis[c], c);
  spread(target, n);

  std::vector<std::pair<std::size_t, std::vector<Coeff>>> pivots;
  for (auto& [key, row] : rows) {
    for (const auto& [col, prow] : pivots) {
      if (row[col].is_zero()) continue;
      const Coeff f = row[col];
      for (std::size_t c = 0; c <= n; ++c)
        if (!prow[c].is_zero()) row[c] -= f * prow[c];
    }
    std::size_t lead = n;
    for (std::size_t c = 0; c < n; ++c)
      if (!row[c].is_zero()) {
        lead = c;
        break;
      }
    if (lead == n) {
      if (!row[n].is_zero()) return std::nullopt;
      continue;
    }
    const Coeff inv = Coeff(1) / row[lead];
    for (auto& c : row) c *= inv;
    pivots.emplace_back(lead, row);
    if (pivots.size() == n) break;
  }

  std::vector<Coeff> sol(n);
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    const auto& [col, prow] = *it;
    Coeff v = prow[n];
    for (std::size_t c = 0; c < n; ++c)
      if (c != col && !prow[c].is_zero()) v -= prow[c] * sol[c];
    sol[col] = v;
  }

  OperatorExpr check = target;
  for (std::size_t c = 0; c < n; ++c) check -= sol[c] * basis[c];
  if (!check.is_zero()) return std::nullopt;
  return sol;
}

}  // namespace kgsymm::opalg
