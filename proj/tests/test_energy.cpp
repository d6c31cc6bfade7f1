#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ncqosc/energy.hpp"
#include "ncqosc/errors.hpp"

using namespace ncqosc;

namespace {
std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = a + (b - a) * i / (n - 1.0);
  return out;
}
}  // namespace

TEST_CASE("per-case closed energies equal the general formula") {
  for (const CaseId& id : CaseId::all()) {
    const CaseContext ctx = catalog(id, figure1_params());
    for (double t : {0.0, 0.5, 1.5, 3.0}) {
      CHECK(energy_case_closed(ctx, 1, t) ==
            doctest::Approx(energy_general(ctx, 1, 0, t)).epsilon(1e-10));
    }
  }
}

TEST_CASE("growing-field case: the energy is a time constant") {
  const CaseContext ctx = catalog({Family::SetI, CaseTag::II}, figure1_params());
  const std::vector<double> grid = linspace(0.0, 5.0, 40);
  const EnergySeries s = energy_case_series(ctx, 1, grid);
  double mean = 0.0;
  for (double v : s.value) mean += v;
  mean /= s.value.size();
  double var = 0.0;
  for (double v : s.value) var += (v - mean) * (v - mean);
  CHECK(std::sqrt(var / s.value.size()) / std::abs(mean) <= 1e-12);
  CHECK(mean == doctest::Approx(23635024.502905793).epsilon(1e-9));
}

TEST_CASE("late-time limit of the constant-field case") {
  const CaseContext ctx = catalog({Family::SetI, CaseTag::I}, figure1_params());
  const double asym = energy_set1_case1_asymptote(ctx, 1);
  CHECK(asym == doctest::Approx(23165277.502054516).epsilon(1e-12));
  CHECK(energy_case_closed(ctx, 1, 20.0) == doctest::Approx(asym).epsilon(1e-6));
  // the B = 0 energy is that same constant at all times
  ScenarioParams p = figure1_params();
  p.B0 = 0.0;
  const CaseContext nofield = catalog({Family::SetI, CaseTag::I}, p);
  for (double t : {0.0, 1.0, 4.0}) {
    CHECK(energy_case_closed(nofield, 1, t) == doctest::Approx(asym).epsilon(1e-10));
  }
}

TEST_CASE("decaying-field case approaches the shared limit faster") {
  const CaseContext c1 = catalog({Family::SetI, CaseTag::I}, figure1_params());
  const CaseContext c3 = catalog({Family::SetI, CaseTag::III}, figure1_params());
  const double asym = energy_set1_case1_asymptote(c1, 1);
  for (double t : linspace(0.2, 5.0, 15)) {
    CHECK(std::abs(energy_case_closed(c3, 1, t) - asym) <=
          std::abs(energy_case_closed(c1, 1, t) - asym));
  }
}

TEST_CASE("decaying-frequency case dips before growing") {
  const CaseContext c4 = catalog({Family::SetI, CaseTag::IV}, figure1_params());
  const EnergySeries s = energy_case_series(c4, 1, linspace(0.0, 5.0, 101));
  bool saw_decrease = false, saw_minimum = false;
  for (std::size_t i = 1; i < s.value.size(); ++i) {
    const double d = s.value[i] - s.value[i - 1];
    if (d < 0.0) saw_decrease = true;
    if (saw_decrease && d > 0.0) saw_minimum = true;
  }
  CHECK(saw_minimum);
}

TEST_CASE("rational cases decay toward zero") {
  const CaseContext s2 = catalog({Family::SetII, CaseTag::II}, figure1_params());
  const double e0 = energy_case_closed(s2, 1, 0.0);
  const double e_late = energy_case_closed(s2, 1, 500.0);
  CHECK(e_late < 1e-2 * e0);
}

TEST_CASE("weak-field continuity") {
  ScenarioParams weak = figure1_params();
  weak.B0 = 1e-6;
  ScenarioParams off = figure1_params();
  off.B0 = 0.0;
  for (const CaseId id : {CaseId{Family::SetI, CaseTag::I},
                          CaseId{Family::SetII, CaseTag::II}}) {
    const CaseContext a = catalog(id, weak);
    const CaseContext b = catalog(id, off);
    for (double t : {0.0, 1.0, 3.0}) {
      CHECK(energy_case_closed(a, 1, t) ==
            doctest::Approx(energy_case_closed(b, 1, t)).epsilon(1e-4));
    }
  }
}

TEST_CASE("energy survives the small-frequency, zero-field corner") {
  ScenarioParams p = figure1_params();
  p.omega0 = 1e-6;
  p.B0 = 0.0;
  const CaseContext ctx = catalog({Family::SetI, CaseTag::I}, p);
  CHECK(energy_case_closed(ctx, 1, 2.0) > 1e6);
}

TEST_CASE("sign of the charge matters exactly when a field couples n != m") {
  const CaseContext c2 = catalog({Family::SetI, CaseTag::II}, figure1_params());
  SUBCASE("field on, n != m: energies split") {
    const ChargePair pair = charge_asymmetry(c2, 1, 0, 1.0);
    CHECK(pair.E_plus != doctest::Approx(pair.E_minus).epsilon(1e-12));
  }
  SUBCASE("n = m: the split collapses") {
    const ChargePair pair = charge_asymmetry(c2, 1, 1, 1.0);
    CHECK(pair.E_plus == doctest::Approx(pair.E_minus).epsilon(1e-12));
  }
  SUBCASE("no field: the split collapses") {
    ScenarioParams p = figure1_params();
    p.B0 = 0.0;
    const CaseContext nofield = catalog({Family::SetI, CaseTag::II}, p);
    const ChargePair pair = charge_asymmetry(nofield, 1, 0, 1.0);
    CHECK(pair.E_plus == doctest::Approx(pair.E_minus).epsilon(1e-12));
  }
}

TEST_CASE("reality windows") {
  SUBCASE("large sigma deactivates the exponential-case upper bound") {
    const CaseContext ctx = catalog({Family::SetI, CaseTag::I}, figure1_params());
    const RealityWindow w = reality_window(ctx);
    CHECK(std::isinf(w.upper));
    CHECK(w.lower == -std::numeric_limits<double>::infinity());
  }
  SUBCASE("hand-checked degenerate window") {
    ScenarioParams p = figure1_params();
    p.M = 1.0;
    p.sigma = 0.5;
    p.Delta_c = 2.0;
    p.q = 1.0;
    p.B0 = 2.0;
    p.omega0 = 1.0;
    p.Gamma = 1.0;
    const CaseContext ctx = catalog({Family::SetI, CaseTag::I}, p);
    CHECK(reality_window(ctx).upper == doctest::Approx(0.0).scale(1.0));
  }
  SUBCASE("outside the window the evaluators throw with the bounds attached") {
    ScenarioParams p = figure1_params();
    p.sigma = 0.5;
    p.Delta_c = 2.0;
    p.B0 = 4.0;
    p.omega0 = 1.0;
    const CaseContext ctx = catalog({Family::SetI, CaseTag::I}, p);
    const RealityWindow w = reality_window(ctx);
    CHECK(w.upper == doctest::Approx(std::log(4.0) / 2.0));
    CHECK_NOTHROW(energy_case_closed(ctx, 1, w.upper - 1e-6));
    CHECK_THROWS_AS(energy_case_closed(ctx, 1, w.upper + 0.1), OutsideRealityWindow);
    try {
      energy_general(ctx, 1, 0, w.upper + 0.1);
      CHECK(false);
    } catch (const OutsideRealityWindow& e) {
      CHECK(e.upper == doctest::Approx(w.upper));
    }
  }
  SUBCASE("rational-case window endpoints at the strong-field parameters") {
    const CaseContext ctx = catalog({Family::SetII, CaseTag::I}, figure2_params());
    const RealityWindow w = reality_window(ctx);
    const ScenarioParams& p = ctx.params;
    CHECK(w.lower ==
          doctest::Approx((p.omega0 * std::sqrt(p.M / p.Delta_c) - p.chi) / p.Gamma));
    CHECK(w.upper > 1e20);
    CHECK(w.upper < 1e21);
  }
}

TEST_CASE("strong-field energies agree with an extended-precision evaluation") {
  // replicate the rational-case formulas in long double at three times
  const ScenarioParams p = figure2_params();
  const CaseContext c1 = catalog({Family::SetII, CaseTag::I}, p);
  const CaseContext c2 = catalog({Family::SetII, CaseTag::II}, p);
  const long double M = p.M, q = p.q, B0 = p.B0, w0 = p.omega0, G = p.Gamma;
  const long double sig = p.sigma, Del = p.Delta_c, chi = p.chi;
  for (double t : {0.0, 1.0, 4.0}) {
    const long double S = G * t + chi;
    {
      const long double mu4 = 16.0L * sig * sig / (16.0L * sig * Del - G * G);
      const long double mu2 = std::sqrt(mu4);
      const long double root_bD = std::sqrt(M * Del * S * S - M * M * w0 * w0);
      const long double R = std::sqrt(q * q * B0 * B0 * sig / M -
                                      w0 * w0 * S * S + 4.0L * w0 * w0 * sig * M);
      const long double denom = 4.0L * M * M * w0 * w0 + q * q * B0 * B0;
      const long double c =
          ((4.0L * M * M * w0 * w0 / (S * S) + 2.0L * q * B0 * root_bD / (S * S)) * R -
           2.0L * q * B0 * M * w0 * w0 / S - q * q * B0 * B0 * root_bD / (M * S)) /
              denom +
          std::sqrt(Del / M - w0 * w0 / (S * S));
      const long double bracket =
          2.0L * (sig / mu2 + Del * mu2) + mu2 * G * G / (8.0L * sig);
      const long double ref = 2.0L * bracket / (2.0L * S) + c;
      CHECK(energy_case_closed(c1, 1, t) ==
            doctest::Approx(static_cast<double>(ref)).epsilon(1e-12));
    }
    {
      const long double mu4 = 4.0L * sig * sig / (4.0L * sig * Del - G * G);
      const long double mu2 = std::sqrt(mu4);
      const long double root_bD = std::sqrt(M * Del - M * M * w0 * w0);
      const long double R =
          std::sqrt(q * q * B0 * B0 * sig / (4.0L * M) + w0 * w0 * (M * sig - 1.0L));
      const long double denom = (4.0L * M * M * w0 * w0 + q * q * B0 * B0) * S;
      const long double c =
          ((4.0L * M * M * w0 * w0 + 2.0L * q * B0 * root_bD) * R -
           2.0L * q * B0 * M * w0 * w0 - q * q * B0 * B0 * root_bD / M) /
              denom +
          std::sqrt(Del / M - w0 * w0) / S;
      const long double ref = 2.0L * mu2 * Del / S + c;
      CHECK(energy_case_closed(c2, 1, t) ==
            doctest::Approx(static_cast<double>(ref)).epsilon(1e-12));
    }
  }
}
