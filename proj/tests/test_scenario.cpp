#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ncqosc/errors.hpp"
#include "ncqosc/scenario.hpp"

using namespace ncqosc;

TEST_CASE("case ids round-trip through their string form") {
  CHECK(CaseId::all().size() == 6);
  for (const CaseId& id : CaseId::all()) {
    CHECK(CaseId::parse(id.str()) == id);
  }
  CHECK((CaseId{Family::SetI, CaseTag::III}).str() == "set1-case3");
  CHECK((CaseId{Family::SetII, CaseTag::II}).str() == "set2-case2");
  CHECK_THROWS_AS(CaseId::parse("set3-case1"), UnknownCase);
  CHECK_THROWS_AS(CaseId::parse("set2-case3"), UnknownCase);
}

TEST_CASE("parameter validation rejects out-of-range fields") {
  ScenarioParams p;
  CHECK_NOTHROW(p.validate());
  p.M = 0.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = ScenarioParams{};
  p.sigma = -1.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = ScenarioParams{};
  p.n = -1;
  CHECK_THROWS_AS(p.validate(), DomainError);
}

TEST_CASE("time profiles evaluate and differentiate") {
  const TimeProfile c = TimeProfile::constant(3.5);
  CHECK(c.value(2.0) == 3.5);
  CHECK(c.derivative(2.0) == 0.0);

  const TimeProfile e = TimeProfile::exponential(2.0, -0.5);
  CHECK(e.value(0.0) == 2.0);
  CHECK(e.value(2.0) == doctest::Approx(2.0 * std::exp(-1.0)));
  CHECK(e.derivative(2.0) == doctest::Approx(-0.5 * e.value(2.0)));

  const TimeProfile r = TimeProfile::rational(6.0, 2.0, 1.0, 1.0);
  CHECK(r.value(0.0) == 6.0);
  CHECK(r.value(1.0) == doctest::Approx(2.0));
  CHECK(r.derivative(1.0) == doctest::Approx(-2.0 / 3.0 * r.value(1.0)));
  CHECK_THROWS_AS(r.value(-0.5), SingularDenominator);
}

TEST_CASE("catalog resolves the six cases with the expected profiles") {
  const ScenarioParams p = figure1_params();

  const CaseContext c1 = catalog({Family::SetI, CaseTag::I}, p);
  CHECK(c1.f.value(1.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(c1.omega.value(3.0) == p.omega0);
  CHECK(c1.B.value(3.0) == p.B0);
  CHECK(c1.ep.kind == EPFamily::Kind::ExponentialSetI);
  CHECK(c1.ep.mu > 0.0);
  CHECK(c1.params.mu == c1.ep.mu);

  const CaseContext c2 = catalog({Family::SetI, CaseTag::II}, p);
  CHECK(c2.B.value(1.0) == doctest::Approx(p.B0 * std::exp(1.0)));

  const CaseContext c4 = catalog({Family::SetI, CaseTag::IV}, p);
  CHECK(c4.omega.value(2.0) == doctest::Approx(p.omega0 * std::exp(-1.0)));

  const CaseContext s1 = catalog({Family::SetII, CaseTag::I}, p);
  CHECK(s1.f.value(5.0) == 1.0);
  CHECK(s1.omega.value(1.0) == doctest::Approx(p.omega0 / 2.0));
  CHECK(s1.B.value(1.0) == doctest::Approx(p.B0 / 2.0));
  CHECK(s1.ep.kind == EPFamily::Kind::RationalSetII);
  CHECK(s1.ep.k == 2);

  const CaseContext s2 = catalog({Family::SetII, CaseTag::II}, p);
  CHECK(s2.ep.kind == EPFamily::Kind::RationalCritical);

  CHECK_THROWS_AS(catalog({Family::SetII, CaseTag::III}, p), UnknownCase);
}

TEST_CASE("an inconsistent user-supplied mu is rejected") {
  ScenarioParams p = figure1_params();
  const CaseContext good = catalog({Family::SetI, CaseTag::I}, p);
  p.mu = good.ep.mu * 1.01;
  CHECK_THROWS_AS(catalog({Family::SetI, CaseTag::I}, p), ConstraintViolated);
  p.mu = good.ep.mu;
  CHECK_NOTHROW(catalog({Family::SetI, CaseTag::I}, p));
}

TEST_CASE("generic exponential context flags off-catalog rate choices") {
  ScenarioParams p = figure1_params();
  p.delta = 0.0;
  p.Lambda = p.Gamma;
  CHECK_FALSE(generic_set1(p).off_catalog);
  CHECK(generic_set1(p).id.tag == CaseTag::II);
  p.Lambda = 0.3;
  CHECK(generic_set1(p).off_catalog);
}

TEST_CASE("scenario JSON parsing") {
  const Scenario sc = scenario_from_json_text(
      R"({"family":"SetI","case":"II","omega0":1e3,"B0":1e2,"sigma":1e7,"Delta_c":1e7,"n":1,"m":0})");
  CHECK(sc.id == CaseId{Family::SetI, CaseTag::II});
  CHECK(sc.params.omega0 == 1e3);
  CHECK(sc.params.B0 == 1e2);

  CHECK_NOTHROW(scenario_from_json_text(R"({"family":"SetII","case":2})"));
  CHECK_THROWS_AS(scenario_from_json_text("not json"), DomainError);
  CHECK_THROWS_AS(scenario_from_json_text("{}"), DomainError);
  CHECK_THROWS_AS(scenario_from_json_text(R"({"family":"SetI","case":"I","bogus":1})"),
                  DomainError);
  CHECK_THROWS_AS(scenario_from_json_text(R"({"family":"SetIII","case":"I"})"),
                  DomainError);
  CHECK_THROWS_AS(scenario_from_json_text(R"({"family":"SetII","case":"III"})"),
                  UnknownCase);
  CHECK_THROWS_AS(load_scenario("/nonexistent/config.json"), DomainError);
}

TEST_CASE("figure parameter sets") {
  const ScenarioParams f1 = figure1_params();
  CHECK(f1.M == 1.0);
  CHECK(f1.q == 1.0);
  CHECK(f1.B0 == 1e2);
  CHECK(f1.omega0 == 1e3);
  CHECK(f1.sigma == 1e7);
  CHECK(f1.Delta_c == 1e7);
  CHECK(f1.n == 1);
  CHECK(f1.m == 0);
  const ScenarioParams f2 = figure2_params();
  CHECK(f2.B0 == 1e20);
  CHECK(f2.omega0 == f1.omega0);
}
