#pragma once

#include <optional>
#include <string>

#include "ncqosc/ep.hpp"

namespace ncqosc {

enum class Family { SetI, SetII };
enum class CaseTag { I, II, III, IV };

struct CaseId {
  Family family = Family::SetI;
  CaseTag tag = CaseTag::I;

  std::string str() const;  // "set1-case1" .. "set2-case2"
  static CaseId parse(const std::string& s);
  static const std::vector<CaseId>& all();

  bool operator==(const CaseId&) const = default;
};

/// All physical and family constants in natural units (hbar = 1).
struct ScenarioParams {
  double M = 1.0;         // mass, > 0
  double q = 1.0;         // charge, any sign
  double omega0 = 1e3;    // base angular frequency, > 0
  double B0 = 1e2;        // base field amplitude, >= 0
  double Gamma = 1.0;     // damping rate, >= 0
  double delta = 0.0;     // frequency-decay rate, >= 0
  double Lambda = 0.0;    // field-growth rate, any real
  double vartheta = 1.0;  // EP decay rate (Set-I)
  double sigma = 1e7;     // EP constant, > 0
  double Delta_c = 1e7;   // EP constant, > 0
  double mu = 0.0;        // 0 => derive from the family constraint
  double xi2 = 1.0;       // EP integration constant, > 0
  double chi = 1.0;       // rational-family offset, > 0
  int k = 2;              // rational-family exponent
  int n = 1;              // quantum number, >= 0
  int m = 0;              // quantum number, >= 0

  void validate() const;  // throws DomainError on out-of-range fields
};

/// One scalar time profile with analytic derivative.
struct TimeProfile {
  enum class Kind { Constant, Exponential, Rational };

  Kind kind = Kind::Constant;
  double amplitude = 1.0;
  double rate = 0.0;   // exponential: amplitude * exp(rate t)
  double Gamma = 0.0;  // rational: amplitude / (Gamma t + chi)^power
  double chi = 1.0;
  double power = 1.0;

  static TimeProfile constant(double amplitude);
  static TimeProfile exponential(double amplitude, double rate);
  static TimeProfile rational(double amplitude, double Gamma, double chi,
                              double power = 1.0);

  double value(double t) const;
  double derivative(double t) const;
};

/// A fully resolved catalog case: profile triple + EP family, with mu
/// normalized to the constraint-derived value.
struct CaseContext {
  CaseId id;
  ScenarioParams params;
  TimeProfile f;
  TimeProfile omega;
  TimeProfile B;
  EPFamily ep;
  bool off_catalog = false;
};

/// Resolves one of the six catalog cases. Throws UnknownCase /
/// ConstraintViolated.
CaseContext catalog(CaseId id, const ScenarioParams& p);

/// Generic Set-I context with arbitrary (vartheta, delta, Lambda): profiles
/// f = e^{-Gamma t}, omega = omega0 e^{-delta t/2}, B = B0 e^{Lambda t}.
/// Flagged off_catalog unless the rates match one of Cases I-IV.
CaseContext generic_set1(const ScenarioParams& p);

struct Scenario {
  ScenarioParams params;
  CaseId id;
};

/// Parses the flat key-value scenario document (JSON object reference
/// encoding). Unknown keys are an error.
Scenario scenario_from_json_text(const std::string& text);
Scenario load_scenario(const std::string& path);

/// Built-in parameter sets behind the two figure pipelines.
ScenarioParams figure1_params();
ScenarioParams figure2_params();

}  // namespace ncqosc
