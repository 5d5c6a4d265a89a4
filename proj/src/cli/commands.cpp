#include "commands.hpp"

#include <chrono>
#include <cmath>

#include "kgsymm/error.hpp"
#include "kgsymm/numlab/grid.hpp"
#include "kgsymm/numlab/radial.hpp"
#include "kgsymm/opalg/generators.hpp"
#include "kgsymm/opalg/text.hpp"
#include "kgsymm/spectra.hpp"
#include "parallel.hpp"

namespace kgsymm::cli {

using model::Potential;
using model::QuantumNumbers;
using model::SystemSpec;

namespace {

Potential parse_potential(const std::string& s) {
  if (s == "coulomb") return Potential::Coulomb;
  if (s == "oscillator") return Potential::Oscillator;
  throw DomainError("unknown potential '" + s + "' (expected coulomb or oscillator)");
}

std::vector<int> level_numbers(Potential p, const LevelRange& r) {
  const bool coulomb = p == Potential::Coulomb;
  const int lo = r.n_min.value_or(coulomb ? 1 : 0);
  const int hi = r.n_max.value_or(coulomb ? 5 : 4);
  if (lo < (coulomb ? 1 : 0)) throw DomainError("n-min below the lowest level");
  if (hi < lo) throw DomainError("n-max must not be below n-min");
  if (hi > 400) throw DomainError("n-max above 400 is not supported");
  std::vector<int> ns;
  for (int n = lo; n <= hi; ++n)
    if (!coulomb || n % 2 == 1) ns.push_back(n);
  if (ns.empty()) throw DomainError("level range contains no level");
  return ns;
}

std::string label_column(Potential p) { return p == Potential::Coulomb ? "j" : "s"; }

Cell label_value(const QuantumNumbers& qn) {
  if (qn.kind() == QuantumNumbers::Kind::CoulombJ) return std::int64_t{qn.label()};
  return 0.5 * qn.label();
}

ojson system_json(const SystemSpec& s) {
  ojson j = ojson::object();
  j["geometry"] = s.geometry() == model::Geometry::Flat ? "plane" : "sphere";
  j["potential"] = s.potential() == Potential::Coulomb ? "coulomb" : "oscillator";
  j["m"] = s.mass();
  if (s.potential() == Potential::Coulomb)
    j["k"] = s.coupling();
  else
    j["omega"] = s.omega();
  if (s.geometry() == model::Geometry::Sphere) j["lambda"] = s.curvature();
  return j;
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::string combination_text(const std::vector<opalg::Coeff>& c,
                              const std::vector<std::pair<std::string, opalg::Formula>>& basis) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c[i].to_string() + ")";
    if (basis[i].first != "1") s += "*" + basis[i].first;
  }
  return s.empty() ? "0" : s;
}

}  // namespace

SystemSpec make_system(const SystemArgs& a) {
  const Potential p = parse_potential(a.potential);
  if (a.geometry != "plane" && a.geometry != "sphere")
    throw DomainError("unknown geometry '" + a.geometry + "' (expected plane or sphere)");
  const bool sphere = a.geometry == "sphere";
  if (sphere && !a.lambda) throw DomainError("sphere geometry needs --lambda");
  if (!sphere && a.lambda) throw DomainError("--lambda only applies to the sphere");
  if (p == Potential::Coulomb) {
    if (!a.k) throw DomainError("Coulomb potential needs --k");
    if (a.omega) throw DomainError("--omega does not apply to the Coulomb potential");
    return sphere ? SystemSpec::sphere_coulomb(a.m, *a.k, *a.lambda) : SystemSpec::plane_coulomb(a.m, *a.k);
  }
  if (!a.omega) throw DomainError("oscillator potential needs --omega");
  if (a.k) throw DomainError("--k does not apply to the oscillator potential");
  return sphere ? SystemSpec::sphere_oscillator(a.m, *a.omega, *a.lambda) : SystemSpec::plane_oscillator(a.m, *a.omega);
}

Report cmd_spectrum(const SpectrumConfig& cfg) {
  const SystemSpec spec = make_system(cfg.system);
  const auto ns = level_numbers(spec.potential(), cfg.range);
  Report r;
  r.meta["schema"] = "kg-symm/spectrum/v1";
  r.meta["system"] = system_json(spec);
  r.rows_key = "levels";
  r.table.columns = {"n", label_column(spec.potential()), "degeneracy", "epsilon", "E", "residual", "suspect"};
  r.table.rows = parallel_map<std::vector<Cell>>(ns.size(), [&](std::size_t i) {
    const auto qn = QuantumNumbers::from_n(spec.potential(), ns[i]);
    const auto line = spectra::level_energy(spec, qn);
    return std::vector<Cell>{std::int64_t{ns[i]}, label_value(qn), std::int64_t{line.degeneracy},
                             line.epsilon, line.E, line.residual, line.suspect};
  });
  return r;
}

AlgebraOutcome cmd_verify_algebra(const AlgebraConfig& cfg) {
  const auto sys = opalg::SymbolicSystem::from_name(cfg.system);
  if (!sys) throw DomainError("unknown system '" + cfg.system + "'");
  if (!(cfg.threshold > 0.0) || !(cfg.h > 0.0) || cfg.order < 2 || cfg.order % 2)
    throw DomainError("numeric options need threshold > 0, h > 0 and an even order");
  const opalg::ParamValues pv{cfg.m_eff, cfg.k, cfg.omega_eff, cfg.lambda};
  const numlab::NumericOptions nopt{cfg.h, cfg.order};
  const auto packets = numlab::default_packets();
  const auto suite = opalg::identity_suite(*sys);

  struct Record {
    std::vector<Cell> row;
    bool symbolic_zero = false;
    bool confirmed = false;
    bool printed_refuted = false;
  };
  const auto records = parallel_map<Record>(suite.size(), [&](std::size_t i) {
    const auto& id = suite[i];
    const opalg::OperatorExpr lhs = id.lhs.expand();
    const auto res = opalg::verify_identity(lhs, id.rhs.expand());
    Record rec;
    rec.symbolic_zero = res.is_zero;
    Cell corrected, num, num_corr, refuted;
    if (cfg.numeric || !res.is_zero) num = numlab::formula_residual_numeric(id.lhs, id.rhs, packets, pv, nopt);
    if (!res.is_zero) {
      // Re-express the true left-hand side in the operators of the relation.
      std::vector<opalg::OperatorExpr> basis;
      for (const auto& [name, f] : id.fit_basis) basis.push_back(f.expand());
      const auto fit = basis.empty() ? std::nullopt : opalg::fit_in_basis(lhs, basis);
      if (fit) {
        opalg::Formula engine;
        for (std::size_t b = 0; b < basis.size(); ++b) engine += (*fit)[b] * id.fit_basis[b].second;
        corrected = combination_text(*fit, id.fit_basis);
        const double rc = numlab::formula_residual_numeric(id.lhs, engine, packets, pv, nopt);
        num_corr = rc;
        rec.confirmed = rc < cfg.threshold;
        rec.printed_refuted = std::get<double>(num) > cfg.refute;
        refuted = rec.printed_refuted;
      }
    }
    rec.row = {id.name, id.relation, rec.symbolic_zero, std::int64_t(res.expr.term_count()), corrected, num,
               num_corr, refuted, rec.symbolic_zero || rec.confirmed};
    if (cfg.dump) {
      rec.row.push_back(opalg::to_text(lhs));
      rec.row.push_back(res.is_zero ? Cell{} : Cell{opalg::to_text(res.expr)});
    }
    return rec;
  });

  AlgebraOutcome out;
  Report& r = out.report;
  r.meta["schema"] = "kg-symm/algebra-report/v1";
  r.meta["system"] = sys->name();
  ojson params = ojson::object();
  params["m_eff"] = cfg.m_eff;
  params["k"] = cfg.k;
  params["omega_eff"] = cfg.omega_eff;
  params["lambda"] = cfg.lambda;
  params["spacing"] = cfg.h;
  params["order"] = cfg.order;
  params["threshold"] = cfg.threshold;
  r.meta["numeric"] = cfg.numeric;
  r.meta["numeric_parameters"] = params;
  ojson adj = ojson::array();
  for (const auto& chk : opalg::adjoint_checks(*sys)) {
    ojson a = ojson::object();
    a["generator"] = chk.name;
    a["holds"] = opalg::adjoint(chk.op) == chk.expected;
    adj.push_back(a);
  }
  r.meta["adjoint"] = adj;
  r.rows_key = "identities";
  r.table.columns = {"name", "relation", "symbolic_zero", "residual_terms", "corrected_rhs", "numeric_residual",
                     "numeric_residual_corrected", "printed_refuted", "confirmed"};
  if (cfg.dump) r.table.columns.insert(r.table.columns.end(), {"lhs_canonical", "residual_canonical"});
  int zero = 0, corrected = 0, failed = 0;
  out.all_confirmed = true;
  for (const auto& rec : records) {
    r.table.rows.push_back(rec.row);
    if (rec.symbolic_zero)
      ++zero;
    else if (rec.confirmed)
      ++corrected;
    else
      ++failed;
    out.all_confirmed = out.all_confirmed && (rec.symbolic_zero || rec.confirmed);
  }
  ojson summary = ojson::object();
  summary["total"] = records.size();
  summary["symbolic_zero"] = zero;
  summary["corrected"] = corrected;
  summary["failed"] = failed;
  r.meta["summary"] = summary;
  return out;
}

Report cmd_radial(const RadialConfig& cfg) {
  const SystemSpec spec = make_system(cfg.system);
  if (spec.geometry() != model::Geometry::Flat) throw DomainError("the radial solver handles the plane only");
  if (cfg.points < 100) throw DomainError("--points must be at least 100");
  if (!(cfg.tolerance > 0.0)) throw DomainError("--tol must be positive");
  LevelRange range = cfg.range;
  if (!range.n_max) range.n_max = spec.potential() == Potential::Coulomb ? 5 : 2;
  struct Job {
    int n, l, nr;
  };
  std::vector<Job> jobs;
  for (int n : level_numbers(spec.potential(), range)) {
    if (spec.potential() == Potential::Coulomb) {
      const int j = (n - 1) / 2;
      for (int l = 0; l <= j; ++l) jobs.push_back({n, l, j - l});
    } else {
      for (int l = n % 2; l <= n; l += 2) jobs.push_back({n, l, (n - l) / 2});
    }
  }
  numlab::SelfConsistentOptions opt;
  opt.points = cfg.points;
  opt.tolerance = cfg.tolerance;
  Report r;
  r.meta["schema"] = "kg-symm/radial/v1";
  r.meta["system"] = system_json(spec);
  r.meta["points"] = cfg.points;
  r.meta["tolerance"] = cfg.tolerance;
  r.rows_key = "levels";
  r.table.columns = {"n", "l", "n_r", "multiplicity", "epsilon_numeric", "epsilon_analytic", "rel_diff", "iterations"};
  r.table.rows = parallel_map<std::vector<Cell>>(jobs.size(), [&](std::size_t i) {
    const Job& jb = jobs[i];
    const auto sc = numlab::self_consistent_spectrum(spec, jb.l, jb.nr, opt);
    const double exact = spectra::level_energy(spec, QuantumNumbers::from_n(spec.potential(), jb.n)).epsilon;
    return std::vector<Cell>{std::int64_t{jb.n}, std::int64_t{jb.l}, std::int64_t{jb.nr},
                             std::int64_t{jb.l == 0 ? 1 : 2}, sc.line.epsilon, exact,
                             rel_diff(sc.line.epsilon, exact), std::int64_t(sc.history.size() - 1)};
  });
  return r;
}

Report cmd_limits(const LimitsConfig& cfg) {
  SystemArgs base = cfg.system;
  base.geometry = "plane";
  const SystemSpec plane = make_system(base);
  const bool coulomb = plane.potential() == Potential::Coulomb;
  LevelRange range = cfg.range;
  if (!range.n_max) range.n_max = coulomb ? 7 : 6;
  const auto ns = level_numbers(plane.potential(), range);
  const double strength = coulomb ? plane.coupling() : plane.omega();
  const double m = plane.mass();

  struct Job {
    bool curvature;
    double param;
    int n;
  };
  std::vector<Job> jobs;
  for (double lam : {1e-2, 1e-4, 1e-6, 1e-8})
    for (int n : ns) jobs.push_back({true, lam, n});
  for (double mass : {1e2, 1e4, 1e6})
    for (int n : ns) jobs.push_back({false, mass, n});

  Report r;
  r.meta["schema"] = "kg-symm/limits/v1";
  r.meta["system"] = system_json(plane);
  r.rows_key = "rows";
  r.table.columns = {"sweep", "parameter", "n", "epsilon", "E", "reference", "rel_diff"};
  r.table.rows = parallel_map<std::vector<Cell>>(jobs.size(), [&](std::size_t i) {
    const Job& jb = jobs[i];
    const auto qn = QuantumNumbers::from_n(plane.potential(), jb.n);
    if (jb.curvature) {
      // sphere of small curvature against the plane
      const SystemSpec s = coulomb ? SystemSpec::sphere_coulomb(m, strength, jb.param)
                                   : SystemSpec::sphere_oscillator(m, strength, jb.param);
      const auto line = spectra::level_energy(s, qn);
      const double ref = spectra::level_energy(plane, qn).epsilon;
      return std::vector<Cell>{std::string("curvature"), jb.param, std::int64_t{jb.n}, line.epsilon, line.E, ref,
                               rel_diff(line.epsilon, ref)};
    }
    // heavy particle at fixed binding scale: k^2 m and m omega^2 held fixed
    const double scale = std::sqrt(m / jb.param);
    const SystemSpec s = coulomb ? SystemSpec::plane_coulomb(jb.param, strength * scale)
                                 : SystemSpec::plane_oscillator(jb.param, strength * scale);
    const auto line = spectra::level_energy(s, qn);
    const double ref = spectra::nonrel_spectrum(s)(jb.param, qn);
    return std::vector<Cell>{std::string("mass"), jb.param, std::int64_t{jb.n}, line.epsilon, line.E, ref,
                             rel_diff(line.E, ref)};
  });
  return r;
}

Report cmd_map(const MapConfig& cfg) {
  Report r;
  if (cfg.list) {
    r.meta["schema"] = "kg-symm/map/v1";
    r.meta["catalog"] = true;
    r.rows_key = "spectra";
    r.table.columns = {"name", "formula", "family"};
    for (const auto& e : spectra::catalog())
      r.table.rows.push_back({e.name, e.formula, std::string(e.family == Potential::Coulomb ? "coulomb" : "oscillator")});
    return r;
  }
  if (cfg.spectrum.empty()) throw DomainError("map needs --spectrum NAME (see --list)");
  const auto fn = spectra::catalog_spectrum(cfg.spectrum, cfg.k, cfg.elasticity, cfg.lambda);
  if (!(cfg.m > 0.0)) throw DomainError("--m must be positive");
  Potential family = Potential::Coulomb;
  for (const auto& e : spectra::catalog())
    if (e.name == cfg.spectrum) family = e.family;

  std::optional<SystemSpec> sys;
  const double w = std::sqrt(std::max(cfg.elasticity, 0.0) / cfg.m);
  if (cfg.spectrum == "hydrogen-2d") sys = SystemSpec::plane_coulomb(cfg.m, cfg.k);
  if (cfg.spectrum == "oscillator-2d") sys = SystemSpec::plane_oscillator(cfg.m, w);
  if (cfg.spectrum == "higgs-coulomb") sys = SystemSpec::sphere_coulomb(cfg.m, cfg.k, cfg.lambda);
  if (cfg.spectrum == "higgs-oscillator") sys = SystemSpec::sphere_oscillator(cfg.m, w, cfg.lambda);

  const auto ns = level_numbers(family, cfg.range);
  r.meta["schema"] = "kg-symm/map/v1";
  r.meta["spectrum"] = cfg.spectrum;
  ojson params = ojson::object();
  params["m"] = cfg.m;
  params["k"] = cfg.k;
  params["elasticity"] = cfg.elasticity;
  params["lambda"] = cfg.lambda;
  r.meta["parameters"] = params;
  r.rows_key = "levels";
  r.table.columns = {"n", label_column(family), "epsilon_map", "epsilon_level", "rel_diff"};
  r.table.rows = parallel_map<std::vector<Cell>>(ns.size(), [&](std::size_t i) {
    const auto qn = QuantumNumbers::from_n(family, ns[i]);
    const double eps = spectra::uniform_map(fn, cfg.m, qn);
    Cell level, diff;
    if (sys) {
      const double e = spectra::level_energy(*sys, qn).epsilon;
      level = e;
      diff = rel_diff(eps, e);
    }
    return std::vector<Cell>{std::int64_t{ns[i]}, label_value(qn), eps, level, diff};
  });
  return r;
}

}  // namespace kgsymm::cli
