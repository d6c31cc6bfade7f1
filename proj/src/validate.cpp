#include "ncqosc/validate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "ncqosc/canonical.hpp"
#include "ncqosc/energy.hpp"
#include "ncqosc/ep.hpp"
#include "ncqosc/errors.hpp"
#include "ncqosc/ncparams.hpp"
#include "ncqosc/phase.hpp"
#include "ncqosc/quadrature.hpp"
#include "ncqosc/wavefunction.hpp"

namespace ncqosc {

namespace {

double rel_err(double x, double y, double floor = 1.0) {
  return std::abs(x - y) / std::max({std::abs(x), std::abs(y), floor});
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = a + (b - a) * i / (n - 1.0);
  return out;
}

std::vector<CaseContext> all_catalog_contexts() {
  std::vector<CaseContext> out;
  for (const CaseId& id : CaseId::all()) out.push_back(catalog(id, figure1_params()));
  return out;
}

struct Checker {
  std::vector<CheckResult>& out;

  void record(const std::string& name, bool ok, const std::string& detail) {
    out.push_back({name, ok, detail});
  }

  // Runs fn, which returns (ok, detail); converts exceptions into failures.
  template <typename Fn>
  void run(const std::string& name, Fn&& fn) {
    try {
      auto [ok, detail] = fn();
      record(name, ok, detail);
    } catch (const std::exception& e) {
      record(name, false, std::string("exception: ") + e.what());
    }
  }
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// --- criterion 1 ---------------------------------------------------------
std::pair<bool, std::string> check_commutator_table() {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const double theta = dist(rng);
    const double Omega = dist(rng);
    const BoppFrame fr = bopp_shift(theta, Omega);
    const double diag = 1.0 + theta * Omega / 4.0;
    worst = std::max({worst,
                      std::abs(symplectic_pairing(fr.X1, fr.X2) - theta),
                      std::abs(symplectic_pairing(fr.P1, fr.P2) - Omega),
                      std::abs(symplectic_pairing(fr.X1, fr.P1) - diag),
                      std::abs(symplectic_pairing(fr.X2, fr.P2) - diag),
                      std::abs(symplectic_pairing(fr.X1, fr.P2)),
                      std::abs(symplectic_pairing(fr.X2, fr.P1))});
  }
  return {worst <= 1e-14, "max commutator deviation " + fmt(worst) + " (limit 1e-14)"};
}

// --- criterion 2 ---------------------------------------------------------
std::pair<bool, std::string> check_hamiltonian_expansion() {
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  double worst = 0.0;
  for (const CaseContext& ctx : all_catalog_contexts()) {
    for (double t : linspace(0.0, 2.0, 10)) {
      const ScenarioParams& p = ctx.params;
      const double f = ctx.f.value(t), w = ctx.omega.value(t), B = ctx.B.value(t);
      const NCPair nc = nc_parameters(ctx, t);
      const QuadraticForm expanded =
          expand_nc_hamiltonian(p.M, p.q, f, w, B, nc.theta, nc.Omega);
      const HamiltonianCoefficients h =
          hamiltonian_coefficients(p.M, p.q, f, w, B, nc.theta, nc.Omega);
      const QuadraticForm direct = coefficient_form(h);
      // cross-term antisymmetry of the coefficient route
      if (std::abs(direct.Q[2][1] + direct.Q[0][3]) >
          1e-12 * std::max(1.0, std::abs(h.c))) {
        return {false, "cross-term antisymmetry broken at t=" + fmt(t)};
      }
      const double scale = std::abs(h.a) + std::abs(h.b) + std::abs(h.c);
      for (int pt = 0; pt < 100; ++pt) {
        const std::array<double, 4> z = {dist(rng), dist(rng), dist(rng), dist(rng)};
        const double e1 = expanded.evaluate(z);
        const double e2 = direct.evaluate(z);
        worst = std::max(worst, std::abs(e1 - e2) /
                                    std::max({std::abs(e1), std::abs(e2), scale}));
      }
    }
  }
  return {worst <= 1e-12, "max form mismatch " + fmt(worst) + " (limit 1e-12)"};
}

// --- criterion 3 ---------------------------------------------------------
std::pair<bool, std::string> check_ep_residual_and_integrator() {
  double worst_res = 0.0;
  for (const CaseContext& ctx : all_catalog_contexts()) {
    for (double t : linspace(0.0, 5.0, 200)) {
      const double a = ctx.ep.a(t), ad = ctx.ep.a_dot(t), b = ctx.ep.b(t);
      const double r = ctx.ep.rho(t), rd = ctx.ep.rho_dot(t), rdd = ctx.ep.rho_ddot(t);
      const double res = ep_residual(a, ad, b, r, rd, rdd, ctx.ep.xi2);
      worst_res = std::max(worst_res, std::abs(res) / std::abs(a * b * r));
    }
  }
  if (worst_res > 1e-10) {
    return {false, "analytic EP residual " + fmt(worst_res) + " exceeds 1e-10"};
  }

  // Integrator cross-check on moderately scaled versions of each family.
  std::vector<EPFamily> families = {
      EPFamily::exponential_set1(2.0, 3.0, 1.0),
      EPFamily::rational_set2(2.0, 3.0, 1.0, 1.0, 2),
      EPFamily::rational_critical(2.0, 3.0, 1.0, 1.0)};
  double worst_dev = 0.0;
  const std::vector<double> grid = linspace(0.0, 5.0, 51);
  for (const EPFamily& fam : families) {
    auto a = [&](double t) { return fam.a(t); };
    auto ad = [&](double t) { return fam.a_dot(t); };
    auto b = [&](double t) { return fam.b(t); };
    const EPSolutionNumeric sol =
        ep_integrate(a, ad, b, fam.rho(0.0), fam.rho_dot(0.0), fam.xi2, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      worst_dev = std::max(worst_dev, rel_err(sol.rho[i], fam.rho(grid[i]), 1e-30));
    }
  }
  return {worst_dev <= 1e-8, "EP residual " + fmt(worst_res) +
                                 ", integrator deviation " + fmt(worst_dev) +
                                 " (limits 1e-10, 1e-8)"};
}

// --- criterion 4 ---------------------------------------------------------
std::pair<bool, std::string> check_invariant_odes() {
  double worst = 0.0;
  for (const CaseContext& ctx : all_catalog_contexts()) {
    for (double t : linspace(0.1, 4.9, 20)) {
      const auto res = invariant_ode_residuals(ctx.ep, t);
      worst = std::max({worst, std::abs(res[0]), std::abs(res[1]), std::abs(res[2])});
    }
  }
  return {worst <= 1e-6, "max invariant-ODE residual " + fmt(worst) + " (limit 1e-6)"};
}

// --- criterion 5 ---------------------------------------------------------
std::pair<bool, std::string> check_nc_back_substitution() {
  double worst = 0.0;
  for (const CaseContext& ctx : all_catalog_contexts()) {
    for (int i = 0; i < 50; ++i) {
      const double t = 1e-3 * std::pow(4.0 / 1e-3, i / 49.0);  // log-spaced
      const ScenarioParams& p = ctx.params;
      const double f = ctx.f.value(t), w = ctx.omega.value(t), B = ctx.B.value(t);
      const NCPair nc = nc_parameters(ctx, t);
      const HamiltonianCoefficients h =
          hamiltonian_coefficients(p.M, p.q, f, w, B, nc.theta, nc.Omega);
      worst = std::max({worst, rel_err(h.a, ctx.ep.a(t), 1e-30),
                        rel_err(h.b, ctx.ep.b(t), 1e-30)});
    }
  }
  if (worst > 1e-10) {
    return {false, "back-substitution mismatch " + fmt(worst) + " exceeds 1e-10"};
  }

  // product constancy for the two designated cases + equality of constants
  double means[2];
  int idx = 0;
  for (const CaseId id : {CaseId{Family::SetI, CaseTag::II},
                          CaseId{Family::SetII, CaseTag::II}}) {
    const CaseContext ctx = catalog(id, figure1_params());
    std::vector<double> vals;
    for (double t : linspace(0.0, 4.0, 50))
      vals.push_back(theta_omega_product(ctx, t));
    double mean = 0.0;
    for (double v : vals) mean += v;
    mean /= vals.size();
    double var = 0.0;
    for (double v : vals) var += (v - mean) * (v - mean);
    const double rel_std = std::sqrt(var / vals.size()) / std::abs(mean);
    if (rel_std > 1e-10) {
      return {false, id.str() + " theta*Omega rel-std " + fmt(rel_std) +
                         " exceeds 1e-10"};
    }
    means[idx++] = mean;
  }
  const double const_diff = rel_err(means[0], means[1], 1e-30);
  return {const_diff <= 1e-10,
          "back-substitution " + fmt(worst) + ", product constants differ by " +
              fmt(const_diff) + " (limits 1e-10)"};
}

// --- criterion 6 ---------------------------------------------------------
std::pair<bool, std::string> check_phase_cross_validation() {
  double worst = 0.0;
  const std::vector<CaseId> cases = {{Family::SetI, CaseTag::I},
                                     {Family::SetI, CaseTag::II},
                                     {Family::SetI, CaseTag::III},
                                     {Family::SetII, CaseTag::II}};
  for (const CaseId id : cases) {
    const CaseContext ctx = catalog(id, figure1_params());
    for (double t : linspace(0.5, 4.0, 8)) {
      const double quad = phase_quadrature(ctx, 1, 0, t);
      const double closed = phase_closed_form(ctx, 1, 0, t);
      worst = std::max(worst, rel_err(quad, closed));
    }
  }
  if (worst > 1e-6) {
    return {false, "closed-form vs quadrature mismatch " + fmt(worst) +
                       " exceeds 1e-6"};
  }

  // linear phase: slope constancy for set1-case2
  const CaseContext c2 = catalog({Family::SetI, CaseTag::II}, figure1_params());
  double slope0 = phase_quadrature(c2, 1, 0, 1.0);
  double worst_slope = 0.0;
  for (double t : {0.5, 1.5, 2.5, 3.5}) {
    worst_slope = std::max(worst_slope,
                           rel_err(phase_quadrature(c2, 1, 0, t) / t, slope0, 1e-30));
  }
  return {worst_slope <= 1e-10, "phase mismatch " + fmt(worst) +
                                    ", slope wobble " + fmt(worst_slope) +
                                    " (limits 1e-6, 1e-10)"};
}

// --- criterion 7 ---------------------------------------------------------
std::pair<bool, std::string> check_orthonormality() {
  const std::vector<std::pair<int, int>> states = {{0, 0}, {1, 0}, {1, 1},
                                                   {2, 0}, {2, 2}, {3, 1}};
  double worst = 0.0;
  for (const CaseContext& ctx : all_catalog_contexts()) {
    for (double t : {0.0, 0.5, 1.0}) {
      EigenfunctionSpec base;
      base.rho = ctx.ep.rho(t);
      base.rho_dot = ctx.ep.rho_dot(t);
      base.a = ctx.ep.a(t);
      for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = i; j < states.size(); ++j) {
          EigenfunctionSpec A = base, B = base;
          A.n = states[i].first;
          A.m = states[i].second;
          B.n = states[j].first;
          B.m = states[j].second;
          const std::complex<double> val = orthonormality_integral(A, B);
          const double target = (i == j) ? 1.0 : 0.0;
          worst = std::max(worst, std::abs(val - target));
        }
      }
    }
  }
  return {worst <= 1e-6, "max orthonormality deviation " + fmt(worst) + " (limit 1e-6)"};
}

// --- criterion 8 ---------------------------------------------------------
std::pair<bool, std::string> check_invariant_ratio() {
  const std::vector<double> angs = linspace(0.1, 6.0, 7);

  // constant coefficients: sigma = Delta = mu = xi = 1
  EigenfunctionSpec ground;  // n = 0, m = 0, rho = 1, rho_dot = 0, a = 1
  const std::vector<double> rs = linspace(0.6, 1.4, 9);
  const RatioField f1 = invariant_apply_polar(ground, 1.0, rs, angs, 1e-3);
  const RatioField f1_half = invariant_apply_polar(ground, 1.0, rs, angs, 5e-4);

  // n = 1, m = 0 at t = 0 for the exponential family
  const CaseContext ctx = catalog({Family::SetI, CaseTag::I}, figure1_params());
  EigenfunctionSpec excited;
  excited.n = 1;
  excited.m = 0;
  excited.rho = ctx.ep.rho(0.0);
  excited.rho_dot = ctx.ep.rho_dot(0.0);
  excited.a = ctx.ep.a(0.0);
  std::vector<double> rs2 = rs;
  for (double& r : rs2) r *= excited.rho;
  const RatioField f2 = invariant_apply_polar(excited, ctx.ep.xi2, rs2, angs, 1e-3);

  const bool spread_ok = f1.spread <= 1e-4 && f2.spread <= 1e-4;
  const bool converges = f1_half.spread <= f1.spread / 2.5;  // ~O(h^2)
  return {spread_ok && converges,
          "ratio spreads " + fmt(f1.spread) + ", " + fmt(f2.spread) +
              " (limit 1e-4); refinement factor " +
              fmt(f1.spread / std::max(f1_half.spread, 1e-300)) + " (need >= 2.5)"};
}

// --- criterion 9 ---------------------------------------------------------
std::pair<bool, std::string> check_energy_consistency() {
  double worst = 0.0;
  for (const CaseContext& ctx : all_catalog_contexts()) {
    const RealityWindow w = reality_window(ctx);
    const double lo = std::max(0.0, w.lower);
    const double hi = std::min(5.0, w.upper);
    for (double t : linspace(lo, hi, 11)) {
      worst = std::max(worst, rel_err(energy_case_closed(ctx, 1, t),
                                      energy_general(ctx, 1, 0, t), 1e-30));
    }
  }
  if (worst > 1e-10) {
    return {false, "closed vs general energy mismatch " + fmt(worst) +
                       " exceeds 1e-10"};
  }

  const CaseContext c2 = catalog({Family::SetI, CaseTag::II}, figure1_params());
  const double e_const = energy_case_closed(c2, 1, 0.0);
  const double e_const_ref = 23635024.502905793;  // frozen reference value
  if (rel_err(e_const, e_const_ref) > 1e-9) {
    return {false, "set1-case2 constant " + fmt(e_const) + " != frozen " +
                       fmt(e_const_ref)};
  }

  const CaseContext c1 = catalog({Family::SetI, CaseTag::I}, figure1_params());
  const double asym = energy_set1_case1_asymptote(c1, 1);
  const double late = energy_case_closed(c1, 1, 20.0);
  const double asym_err = rel_err(late, asym);
  if (asym_err > 1e-6) {
    return {false, "late-time energy off asymptote by " + fmt(asym_err)};
  }
  ScenarioParams nofield = figure1_params();
  nofield.B0 = 0.0;
  const CaseContext c1b0 = catalog({Family::SetI, CaseTag::I}, nofield);
  const double e_b0 = energy_case_closed(c1b0, 1, 0.0);
  const double b0_err = rel_err(e_b0, asym);
  return {b0_err <= 1e-10, "energy mismatch " + fmt(worst) + ", asymptote error " +
                               fmt(asym_err) + ", B=0 constant error " + fmt(b0_err)};
}

// --- criterion 10 --------------------------------------------------------
std::pair<bool, std::string> check_figure_narratives() {
  const std::vector<double> grid = linspace(0.0, 5.0, 101);

  // set1-case4: interior minimum (decreases, then increases)
  const CaseContext c4 = catalog({Family::SetI, CaseTag::IV}, figure1_params());
  const EnergySeries s4 = energy_case_series(c4, 1, grid);
  bool saw_decrease = false, saw_minimum = false;
  for (std::size_t i = 1; i < s4.value.size(); ++i) {
    const double d = s4.value[i] - s4.value[i - 1];
    if (d < 0.0) saw_decrease = true;
    if (saw_decrease && d > 0.0) {
      saw_minimum = true;
      break;
    }
  }
  if (!saw_minimum) return {false, "set1-case4 series has no interior minimum"};

  // set2: Case I decays faster than Case II, and the field enhances energy
  const ScenarioParams p2 = figure2_params();
  const CaseContext s2c1 = catalog({Family::SetII, CaseTag::I}, p2);
  const CaseContext s2c2 = catalog({Family::SetII, CaseTag::II}, p2);
  ScenarioParams p2b0 = p2;
  p2b0.B0 = 0.0;
  const CaseContext s2c1_b0 = catalog({Family::SetII, CaseTag::I}, p2b0);
  const CaseContext s2c2_b0 = catalog({Family::SetII, CaseTag::II}, p2b0);
  const double e1_0 = energy_case_closed(s2c1, 1, 0.0);
  const double e2_0 = energy_case_closed(s2c2, 1, 0.0);
  for (double t : linspace(0.1, 5.0, 25)) {
    const double e1 = energy_case_closed(s2c1, 1, t);
    const double e2 = energy_case_closed(s2c2, 1, t);
    // faster decay: the Case-I curve loses more energy by every sampled time
    if (e1_0 - e1 <= e2_0 - e2) {
      return {false, "set2-case1 does not decay faster at t=" + fmt(t)};
    }
    if (e1 <= energy_case_closed(s2c1_b0, 1, t) ||
        e2 <= energy_case_closed(s2c2_b0, 1, t)) {
      return {false, "field does not enhance set2 energy at t=" + fmt(t)};
    }
  }
  return {true, "case4 minimum present; set2 decay ordering and field enhancement hold"};
}

// --- criterion 11 --------------------------------------------------------
std::pair<bool, std::string> check_reality_windows() {
  // Fig-1 parameters deactivate the set1-case1 upper bound (M sigma > 1).
  const CaseContext fig1 = catalog({Family::SetI, CaseTag::I}, figure1_params());
  if (std::isfinite(reality_window(fig1).upper)) {
    return {false, "set1-case1 upper bound should be inactive at M*sigma > 1"};
  }

  double worst = 0.0;
  auto check_bound = [&](double analytic, const std::function<double(double)>& radicand,
                         double lo, double hi) {
    const double root = bisect_root(radicand, lo, hi);
    worst = std::max(worst, std::abs(root - analytic) /
                                std::max(1.0, std::abs(analytic)));
  };

  // small-sigma parameters give finite exponential-family bounds
  ScenarioParams p = figure1_params();
  p.M = 1.0;
  p.q = 1.0;
  p.B0 = 4.0;
  p.omega0 = 1.0;
  p.sigma = 0.5;
  p.Delta_c = 2.0;
  {
    const CaseContext c1 = catalog({Family::SetI, CaseTag::I}, p);
    check_bound(reality_window(c1).upper,
                [&](double t) {
                  const double E = std::exp(-p.Gamma * t);
                  return p.B0 * p.B0 * p.sigma * E * E / 4.0 +
                         p.omega0 * p.omega0 * (p.M * p.sigma - 1.0);
                },
                0.0, 20.0);
    const CaseContext c3 = catalog({Family::SetI, CaseTag::III}, p);
    check_bound(reality_window(c3).upper,
                [&](double t) {
                  const double E = std::exp(-2.0 * p.Gamma * t);
                  return p.B0 * p.B0 * p.sigma * E * E / 4.0 +
                         p.omega0 * p.omega0 * (p.M * p.sigma - 1.0);
                },
                0.0, 20.0);
  }
  {
    // case 4: both lower bounds individually, then the max binds
    ScenarioParams p4 = p;
    p4.B0 = 1.0;
    const CaseContext c4 = catalog({Family::SetI, CaseTag::IV}, p4);
    const double t1 = std::log(p4.M * p4.omega0 * p4.omega0 / p4.Delta_c) / p4.Gamma;
    const double t2 = std::log(4.0 * p4.M * p4.omega0 * p4.omega0 *
                               (1.0 - p4.M * p4.sigma) /
                               (p4.B0 * p4.B0 * p4.sigma)) / p4.Gamma;
    check_bound(t1,
                [&](double t) {
                  return p4.M * p4.Delta_c -
                         p4.M * p4.M * p4.omega0 * p4.omega0 * std::exp(-p4.Gamma * t);
                },
                -5.0, 20.0);
    check_bound(t2,
                [&](double t) {
                  return p4.B0 * p4.B0 * p4.sigma / 4.0 +
                         p4.omega0 * p4.omega0 * std::exp(-p4.Gamma * t) *
                             (p4.M * p4.sigma - 1.0);
                },
                -5.0, 20.0);
    if (rel_err(reality_window(c4).lower, std::max(t1, t2)) > 1e-12) {
      return {false, "set1-case4 lower bound is not the greater of the pair"};
    }
  }
  {
    // rational-family window at the strong-field figure parameters
    const ScenarioParams pf = figure2_params();
    const CaseContext c = catalog({Family::SetII, CaseTag::I}, pf);
    const RealityWindow w = reality_window(c);
    check_bound(w.lower,
                [&](double t) {
                  const double S = pf.Gamma * t + pf.chi;
                  return pf.M * pf.Delta_c * S * S -
                         pf.M * pf.M * pf.omega0 * pf.omega0;
                },
                -0.99, 5.0);
    check_bound(w.upper,
                [&](double t) {
                  const double S = pf.Gamma * t + pf.chi;
                  return pf.B0 * pf.B0 * pf.sigma / pf.M -
                         pf.omega0 * pf.omega0 * S * S +
                         4.0 * pf.omega0 * pf.omega0 * pf.sigma * pf.M;
                },
                0.0, 1e21);
  }
  return {worst <= 1e-9,
          "max analytic-vs-bisection bound deviation " + fmt(worst) + " (limit 1e-9)"};
}

}  // namespace

ValidationReport run_validation(const Scenario* scenario) {
  ValidationReport report;
  Checker checker{report.checks};

  if (scenario) {
    checker.run("config-constraint", [&]() -> std::pair<bool, std::string> {
      const CaseContext ctx = catalog(scenario->id, scenario->params);
      const double res = ctx.ep.constraint_residual();
      return {std::abs(res) <= 1e-10,
              "EP family constraint residual " + fmt(res) + " for " +
                  scenario->id.str()};
    });
  }

  checker.run("commutator-table", check_commutator_table);
  checker.run("hamiltonian-expansion", check_hamiltonian_expansion);
  checker.run("ep-residual-and-integrator", check_ep_residual_and_integrator);
  checker.run("invariant-odes", check_invariant_odes);
  checker.run("nc-back-substitution", check_nc_back_substitution);
  checker.run("phase-cross-validation", check_phase_cross_validation);
  checker.run("orthonormality", check_orthonormality);
  checker.run("invariant-ratio-constancy", check_invariant_ratio);
  checker.run("energy-consistency", check_energy_consistency);
  checker.run("figure-narratives", check_figure_narratives);
  checker.run("reality-windows", check_reality_windows);
  return report;
}

}  // namespace ncqosc
