#include "ncqosc/scenario.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "ncqosc/errors.hpp"

namespace ncqosc {

std::string CaseId::str() const {
  const char* fam = (family == Family::SetI) ? "set1" : "set2";
  int num = static_cast<int>(tag) + 1;
  return std::string(fam) + "-case" + std::to_string(num);
}

CaseId CaseId::parse(const std::string& s) {
  for (const CaseId& id : all()) {
    if (id.str() == s) return id;
  }
  throw UnknownCase("unknown case id: " + s);
}

const std::vector<CaseId>& CaseId::all() {
  static const std::vector<CaseId> ids = {
      {Family::SetI, CaseTag::I},  {Family::SetI, CaseTag::II},
      {Family::SetI, CaseTag::III}, {Family::SetI, CaseTag::IV},
      {Family::SetII, CaseTag::I}, {Family::SetII, CaseTag::II}};
  return ids;
}

void ScenarioParams::validate() const {
  auto fail = [](const std::string& msg) { throw DomainError("ScenarioParams: " + msg); };
  if (!(M > 0.0)) fail("M must be > 0");
  if (!(omega0 > 0.0)) fail("omega0 must be > 0");
  if (B0 < 0.0) fail("B0 must be >= 0");
  if (Gamma < 0.0) fail("Gamma must be >= 0");
  if (delta < 0.0) fail("delta must be >= 0");
  if (!(sigma > 0.0)) fail("sigma must be > 0");
  if (!(Delta_c > 0.0)) fail("Delta_c must be > 0");
  if (mu < 0.0) fail("mu must be >= 0 (0 derives it)");
  if (!(xi2 > 0.0)) fail("xi2 must be > 0");
  if (!(chi > 0.0)) fail("chi must be > 0");
  if (n < 0) fail("n must be >= 0");
  if (m < 0) fail("m must be >= 0");
}

TimeProfile TimeProfile::constant(double amplitude) {
  TimeProfile p;
  p.kind = Kind::Constant;
  p.amplitude = amplitude;
  return p;
}

TimeProfile TimeProfile::exponential(double amplitude, double rate) {
  TimeProfile p;
  p.kind = Kind::Exponential;
  p.amplitude = amplitude;
  p.rate = rate;
  return p;
}

TimeProfile TimeProfile::rational(double amplitude, double Gamma, double chi,
                                  double power) {
  TimeProfile p;
  p.kind = Kind::Rational;
  p.amplitude = amplitude;
  p.Gamma = Gamma;
  p.chi = chi;
  p.power = power;
  return p;
}

double TimeProfile::value(double t) const {
  switch (kind) {
    case Kind::Constant:
      return amplitude;
    case Kind::Exponential:
      return amplitude * std::exp(rate * t);
    case Kind::Rational: {
      const double s = Gamma * t + chi;
      if (s == 0.0) throw SingularDenominator("TimeProfile: Gamma*t + chi == 0");
      return amplitude * std::pow(s, -power);
    }
  }
  return 0.0;
}

double TimeProfile::derivative(double t) const {
  switch (kind) {
    case Kind::Constant:
      return 0.0;
    case Kind::Exponential:
      return rate * value(t);
    case Kind::Rational: {
      const double s = Gamma * t + chi;
      if (s == 0.0) throw SingularDenominator("TimeProfile: Gamma*t + chi == 0");
      return -power * Gamma / s * value(t);
    }
  }
  return 0.0;
}

CaseContext catalog(CaseId id, const ScenarioParams& p) {
  p.validate();
  CaseContext ctx;
  ctx.id = id;
  ctx.params = p;
  const double G = p.Gamma;

  if (id.family == Family::SetI) {
    // All four Set-I cases fix vartheta = Gamma, delta in {0, Gamma}.
    ctx.f = TimeProfile::exponential(1.0, -G);
    ctx.omega = TimeProfile::constant(p.omega0);
    switch (id.tag) {
      case CaseTag::I:
        ctx.B = TimeProfile::constant(p.B0);
        break;
      case CaseTag::II:
        ctx.B = TimeProfile::exponential(p.B0, G);
        break;
      case CaseTag::III:
        ctx.B = TimeProfile::exponential(p.B0, -G);
        break;
      case CaseTag::IV:
        ctx.omega = TimeProfile::exponential(p.omega0, -G / 2.0);
        ctx.B = TimeProfile::exponential(p.B0, G);
        break;
    }
    ctx.ep = EPFamily::exponential_set1(p.sigma, p.Delta_c, G, p.xi2, p.mu);
    ctx.params.vartheta = G;
  } else {
    if (id.tag != CaseTag::I && id.tag != CaseTag::II) {
      throw UnknownCase("Set-II has only Cases I and II");
    }
    ctx.f = TimeProfile::constant(1.0);
    ctx.omega = TimeProfile::rational(p.omega0, G, p.chi);
    ctx.B = TimeProfile::rational(p.B0, G, p.chi);
    if (id.tag == CaseTag::I) {
      ctx.ep = EPFamily::rational_set2(p.sigma, p.Delta_c, G, p.chi, 2, p.xi2,
                                       p.mu);
      ctx.params.k = 2;
    } else {
      ctx.ep = EPFamily::rational_critical(p.sigma, p.Delta_c, G, p.chi, p.xi2,
                                           p.mu);
      ctx.params.k = -2;
    }
  }
  ctx.params.mu = ctx.ep.mu;
  return ctx;
}

CaseContext generic_set1(const ScenarioParams& p) {
  p.validate();
  CaseContext ctx;
  ctx.id = {Family::SetI, CaseTag::I};
  ctx.params = p;
  ctx.f = TimeProfile::exponential(1.0, -p.Gamma);
  ctx.omega = (p.delta == 0.0)
                  ? TimeProfile::constant(p.omega0)
                  : TimeProfile::exponential(p.omega0, -p.delta / 2.0);
  ctx.B = (p.Lambda == 0.0) ? TimeProfile::constant(p.B0)
                            : TimeProfile::exponential(p.B0, p.Lambda);
  ctx.ep = EPFamily::exponential_set1(p.sigma, p.Delta_c, p.vartheta, p.xi2,
                                      p.mu);
  ctx.params.mu = ctx.ep.mu;

  ctx.off_catalog = true;
  if (p.vartheta == p.Gamma) {
    if (p.delta == 0.0 && p.Lambda == 0.0) {
      ctx.off_catalog = false;
      ctx.id.tag = CaseTag::I;
    } else if (p.delta == 0.0 && p.Lambda == p.Gamma) {
      ctx.off_catalog = false;
      ctx.id.tag = CaseTag::II;
    } else if (p.delta == 0.0 && p.Lambda == -p.Gamma) {
      ctx.off_catalog = false;
      ctx.id.tag = CaseTag::III;
    } else if (p.delta == p.Gamma && p.Lambda == p.Gamma) {
      ctx.off_catalog = false;
      ctx.id.tag = CaseTag::IV;
    }
  }
  return ctx;
}

Scenario scenario_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("scenario config: parse error: ") + e.what());
  }
  if (!j.is_object()) {
    throw DomainError("scenario config: top level must be an object");
  }

  Scenario sc;
  ScenarioParams& p = sc.params;
  bool have_family = false, have_case = false;
  std::string family_s, case_s;

  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const nlohmann::json& v = it.value();
    auto num = [&]() -> double {
      if (!v.is_number()) throw DomainError("scenario config: key '" + key + "' must be numeric");
      return v.get<double>();
    };
    if (key == "M") p.M = num();
    else if (key == "q") p.q = num();
    else if (key == "omega0") p.omega0 = num();
    else if (key == "B0") p.B0 = num();
    else if (key == "Gamma") p.Gamma = num();
    else if (key == "delta") p.delta = num();
    else if (key == "Lambda") p.Lambda = num();
    else if (key == "vartheta") p.vartheta = num();
    else if (key == "sigma") p.sigma = num();
    else if (key == "Delta_c") p.Delta_c = num();
    else if (key == "mu") p.mu = num();
    else if (key == "xi2") p.xi2 = num();
    else if (key == "chi") p.chi = num();
    else if (key == "k") p.k = static_cast<int>(num());
    else if (key == "n") p.n = static_cast<int>(num());
    else if (key == "m") p.m = static_cast<int>(num());
    else if (key == "family") {
      have_family = true;
      family_s = v.is_string() ? v.get<std::string>() : "";
    } else if (key == "case") {
      have_case = true;
      if (v.is_string()) case_s = v.get<std::string>();
      else if (v.is_number_integer()) case_s = std::to_string(v.get<int>());
      else throw DomainError("scenario config: 'case' must be string or integer");
    } else {
      throw DomainError("scenario config: unknown key '" + key + "'");
    }
  }
  if (!have_family || !have_case) {
    throw DomainError("scenario config: 'family' and 'case' are required");
  }

  Family fam;
  if (family_s == "SetI" || family_s == "set1" || family_s == "SetI ")
    fam = Family::SetI;
  else if (family_s == "SetII" || family_s == "set2")
    fam = Family::SetII;
  else
    throw DomainError("scenario config: family must be 'SetI' or 'SetII'");

  CaseTag tag;
  if (case_s == "I" || case_s == "1") tag = CaseTag::I;
  else if (case_s == "II" || case_s == "2") tag = CaseTag::II;
  else if (case_s == "III" || case_s == "3") tag = CaseTag::III;
  else if (case_s == "IV" || case_s == "4") tag = CaseTag::IV;
  else throw DomainError("scenario config: unknown case '" + case_s + "'");

  sc.id = {fam, tag};
  if (fam == Family::SetII && tag != CaseTag::I && tag != CaseTag::II) {
    throw UnknownCase("Set-II has only Cases I and II");
  }
  p.validate();
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("scenario config: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return scenario_from_json_text(buf.str());
}

ScenarioParams figure1_params() {
  ScenarioParams p;
  p.M = 1.0;
  p.q = 1.0;
  p.B0 = 1e2;
  p.omega0 = 1e3;
  p.Gamma = 1.0;
  p.vartheta = 1.0;
  p.sigma = 1e7;
  p.Delta_c = 1e7;
  p.xi2 = 1.0;
  p.chi = 1.0;
  p.mu = 0.0;  // derived
  p.n = 1;
  p.m = 0;
  return p;
}

ScenarioParams figure2_params() {
  ScenarioParams p = figure1_params();
  p.B0 = 1e20;
  return p;
}

}  // namespace ncqosc
