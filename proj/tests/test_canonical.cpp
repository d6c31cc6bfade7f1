#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ncqosc/canonical.hpp"
#include "ncqosc/errors.hpp"
#include "ncqosc/ncparams.hpp"

using namespace ncqosc;

TEST_CASE("canonical pairs") {
  CHECK(symplectic_pairing(LinearObservable::x1(), LinearObservable::p1()) == 1.0);
  CHECK(symplectic_pairing(LinearObservable::x2(), LinearObservable::p2()) == 1.0);
  CHECK(symplectic_pairing(LinearObservable::x1(), LinearObservable::x2()) == 0.0);
  CHECK(symplectic_pairing(LinearObservable::p1(), LinearObservable::p2()) == 0.0);
  CHECK(symplectic_pairing(LinearObservable::p1(), LinearObservable::x1()) == -1.0);
}

TEST_CASE("shifted frame commutators") {
  SUBCASE("identity at zero parameters") {
    const BoppFrame fr = bopp_shift(0.0, 0.0);
    CHECK(symplectic_pairing(fr.X1, fr.P1) == 1.0);
    CHECK(symplectic_pairing(fr.X1, fr.X2) == 0.0);
    CHECK(symplectic_pairing(fr.P1, fr.P2) == 0.0);
  }
  SUBCASE("hand-checked values") {
    const BoppFrame fr = bopp_shift(0.1, 0.3);
    CHECK(symplectic_pairing(fr.X1, fr.P1) == doctest::Approx(1.0075).epsilon(1e-14));
    CHECK(symplectic_pairing(fr.X1, fr.P2) == 0.0);
    CHECK(symplectic_pairing(fr.X2, fr.P1) == 0.0);
  }
  SUBCASE("full table for random parameters") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    for (int i = 0; i < 100; ++i) {
      const double th = dist(rng), Om = dist(rng);
      const BoppFrame fr = bopp_shift(th, Om);
      CHECK(symplectic_pairing(fr.X1, fr.X2) == doctest::Approx(th).epsilon(1e-14));
      CHECK(symplectic_pairing(fr.P1, fr.P2) == doctest::Approx(Om).epsilon(1e-14));
      CHECK(symplectic_pairing(fr.X2, fr.P2) ==
            doctest::Approx(1.0 + th * Om / 4.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("coefficient formulas, limiting values") {
  SUBCASE("commutative free oscillator") {
    const auto h = hamiltonian_coefficients(2.0, 1.0, 1.0, 3.0, 0.0, 0.0, 0.0);
    CHECK(h.a == doctest::Approx(0.5));
    CHECK(h.b == doctest::Approx(2.0 * 9.0));
    CHECK(h.c == 0.0);
  }
  SUBCASE("hand substitution, no field") {
    const auto h = hamiltonian_coefficients(1.0, 1.0, 1.0, 2.0, 0.0, 0.1, 0.3);
    CHECK(h.a == doctest::Approx(1.01).epsilon(1e-14));
    CHECK(h.b == doctest::Approx(4.0225).epsilon(1e-14));
    CHECK(h.c == doctest::Approx(0.35).epsilon(1e-14));
  }
  SUBCASE("B = 0 cross term reduces to the two NC contributions") {
    const double M = 1.3, f = 0.7, w = 2.1, th = 0.05, Om = 0.4;
    const auto h = hamiltonian_coefficients(M, 1.0, f, w, 0.0, th, Om);
    CHECK(h.c == doctest::Approx(0.5 * (Om * f / M + M * w * w / f * th))
                     .epsilon(1e-14));
  }
  CHECK_THROWS_AS(hamiltonian_coefficients(1.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0),
                  NonPositiveDamping);
  CHECK_THROWS_AS(expand_nc_hamiltonian(1.0, 1.0, -1.0, 1.0, 0.0, 0.0, 0.0),
                  NonPositiveDamping);
}

TEST_CASE("expansion and coefficient routes agree as quadratic forms") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::uniform_real_distribution<double> par(0.2, 3.0);
  for (int trial = 0; trial < 30; ++trial) {
    const double M = par(rng), q = dist(rng) * 2, f = par(rng), w = par(rng);
    const double B = dist(rng) * 3, th = dist(rng), Om = dist(rng);
    const QuadraticForm expanded = expand_nc_hamiltonian(M, q, f, w, B, th, Om);
    const auto h = hamiltonian_coefficients(M, q, f, w, B, th, Om);
    const QuadraticForm direct = coefficient_form(h);

    // matrix entries: antisymmetric cross-term structure
    CHECK(direct.Q[2][1] == doctest::Approx(-direct.Q[0][3]).epsilon(1e-13));
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        CHECK(expanded.Q[i][j] ==
              doctest::Approx(direct.Q[i][j]).epsilon(1e-12).scale(1.0 + std::abs(h.b)));
      }
    }
    for (int pt = 0; pt < 20; ++pt) {
      const std::array<double, 4> z = {dist(rng), dist(rng), dist(rng), dist(rng)};
      CHECK(expanded.evaluate(z) ==
            doctest::Approx(direct.evaluate(z))
                .epsilon(1e-12)
                .scale(1.0 + std::abs(h.a) + std::abs(h.b) + std::abs(h.c)));
    }
  }
}

TEST_CASE("solved NC parameters make both routes reproduce the EP targets") {
  for (const CaseId& id : CaseId::all()) {
    const CaseContext ctx = catalog(id, figure1_params());
    for (double t : {0.0, 0.7, 1.9}) {
      const ScenarioParams& p = ctx.params;
      const double f = ctx.f.value(t), w = ctx.omega.value(t), B = ctx.B.value(t);
      const NCPair nc = nc_parameters(ctx, t);
      const auto h = hamiltonian_coefficients(p.M, p.q, f, w, B, nc.theta, nc.Omega);
      CHECK(h.a == doctest::Approx(ctx.ep.a(t)).epsilon(1e-12));
      CHECK(h.b == doctest::Approx(ctx.ep.b(t)).epsilon(1e-12));
    }
  }
}
