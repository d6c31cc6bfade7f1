#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ncqosc/errors.hpp"
#include "ncqosc/ncparams.hpp"
#include "ncqosc/phase.hpp"
#include "ncqosc/wavefunction.hpp"

using namespace ncqosc;

TEST_CASE("phase vanishes at t = 0 and for the m = 0 tower") {
  for (const CaseId& id : CaseId::all()) {
    const CaseContext ctx = catalog(id, figure1_params());
    CHECK(phase_quadrature(ctx, 1, 0, 0.0) == 0.0);
    CHECK(phase_quadrature(ctx, 2, -2, 3.0) == 0.0);  // m = n + l = 0
  }
}

TEST_CASE("linear phase for the growing-field exponential case") {
  const CaseContext ctx = catalog({Family::SetI, CaseTag::II}, figure1_params());
  const double mu2 = ctx.ep.mu * ctx.ep.mu;
  const double slope = coefficient_c_closed(ctx, 0.0) - ctx.params.sigma / mu2;
  for (double t : {0.5, 1.0, 2.0, 4.0}) {
    CHECK(phase_quadrature(ctx, 1, 0, t) == doctest::Approx(slope * t).epsilon(1e-10));
    CHECK(phase_closed_form(ctx, 1, 0, t) == doctest::Approx(slope * t).epsilon(1e-13));
  }
  // scales with m = n + l
  CHECK(phase_quadrature(ctx, 1, 2, 1.5) ==
        doctest::Approx(3.0 * slope * 1.5).epsilon(1e-10));
}

TEST_CASE("closed forms track quadrature for the elementary cases") {
  const std::vector<CaseId> cases = {{Family::SetI, CaseTag::I},
                                     {Family::SetI, CaseTag::II},
                                     {Family::SetI, CaseTag::III},
                                     {Family::SetII, CaseTag::II}};
  for (const CaseId id : cases) {
    const CaseContext ctx = catalog(id, figure1_params());
    for (double t : {0.25, 1.0, 2.5, 4.0}) {
      const double quad = phase_quadrature(ctx, 1, 0, t);
      const double closed = phase_closed_form(ctx, 1, 0, t);
      CHECK(closed == doctest::Approx(quad).epsilon(1e-6));
    }
    CHECK(phase_closed_form(ctx, 1, 0, 0.0) == doctest::Approx(0.0).scale(1.0));
  }
}

TEST_CASE("cases without a closed form report it and still integrate") {
  const CaseContext c4 = catalog({Family::SetI, CaseTag::IV}, figure1_params());
  const CaseContext s1 = catalog({Family::SetII, CaseTag::I}, figure1_params());
  CHECK_THROWS_AS(phase_closed_form(c4, 1, 0, 1.0), OutOfCatalog);
  CHECK_THROWS_AS(phase_closed_form(s1, 1, 0, 1.0), OutOfCatalog);
  double prev_c4 = 0.0, prev_s1 = 0.0;
  for (double t : {0.5, 1.0, 1.5, 2.0}) {
    const double v4 = phase_quadrature(c4, 1, 0, t);
    const double v1 = phase_quadrature(s1, 1, 0, t);
    CHECK(std::isfinite(v4));
    CHECK(std::isfinite(v1));
    // the integrand is negative and bounded: the phase decreases monotonically
    CHECK(v4 < prev_c4);
    CHECK(v1 < prev_s1);
    prev_c4 = v4;
    prev_s1 = v1;
  }
}

TEST_CASE("quadrature reports a usable error estimate") {
  const CaseContext ctx = catalog({Family::SetI, CaseTag::I}, figure1_params());
  double err = 0.0;
  const double loose = phase_quadrature(ctx, 1, 0, 3.0, 1e-8, &err);
  const double tight = phase_quadrature(ctx, 1, 0, 3.0, 1e-13);
  CHECK(std::abs(loose - tight) <= std::max(err, 1e-9 * std::abs(tight)));
}

TEST_CASE("phase series carries both routes when available") {
  const CaseContext ctx = catalog({Family::SetI, CaseTag::I}, figure1_params());
  const PhaseSeries series = phase_series(ctx, 1, 0, {0.0, 1.0, 2.0});
  REQUIRE(series.theta_closed.has_value());
  REQUIRE(series.theta_quad.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK((*series.theta_closed)[i] ==
          doctest::Approx(series.theta_quad[i]).epsilon(1e-6));
  }
  const CaseContext c4 = catalog({Family::SetI, CaseTag::IV}, figure1_params());
  CHECK_FALSE(phase_series(c4, 1, 0, {0.0, 1.0}).theta_closed.has_value());
}

TEST_CASE("assembled eigenstate is the eigenfunction rotated by a real phase") {
  const CaseContext ctx = catalog({Family::SetI, CaseTag::I}, figure1_params());
  const double t = 1.2, r = 0.8, ang = 0.9;
  SUBCASE("t = 0 and m = 0 leave the eigenfunction untouched") {
    const auto psi0 = eigenstate_assemble(ctx, 1, 2, 0.0, r, ang);
    CHECK(psi0.real() ==
          doctest::Approx(eigenfunction(ctx, 1, 2, 0.0, r, ang).real()));
    const auto psi_m0 = eigenstate_assemble(ctx, 1, 0, t, r, ang);
    const auto phi_m0 = eigenfunction(ctx, 1, 0, t, r, ang);
    CHECK(psi_m0.real() == doctest::Approx(phi_m0.real()));
    CHECK(psi_m0.imag() == doctest::Approx(phi_m0.imag()));
  }
  SUBCASE("modulus is preserved for all towers") {
    for (int m : {1, 2}) {
      const auto psi = eigenstate_assemble(ctx, 1, m, t, r, ang);
      const auto phi = eigenfunction(ctx, 1, m, t, r, ang);
      CHECK(std::abs(psi) == doctest::Approx(std::abs(phi)).epsilon(1e-12));
    }
  }
}
