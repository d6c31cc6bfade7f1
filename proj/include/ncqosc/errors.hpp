#pragma once

#include <stdexcept>
#include <string>

namespace ncqosc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownCase : Error {
  using Error::Error;
};

/// A family constraint equation failed; message names the equation and the
/// relative residual.
struct ConstraintViolated : Error {
  ConstraintViolated(const std::string& what, double residual)
      : Error(what), residual(residual) {}
  double residual;
};

struct NonPositiveDamping : Error {
  using Error::Error;
};

struct SingularDenominator : Error {
  using Error::Error;
};

/// EP trajectory reached rho <= 0 or the step size underflowed.
struct BlowUp : Error {
  BlowUp(const std::string& what, double last_time)
      : Error(what), last_time(last_time) {}
  double last_time;
};

struct NegativeRadicand : Error {
  NegativeRadicand(const std::string& what, double t, double radicand)
      : Error(what), t(t), radicand(radicand) {}
  double t;
  double radicand;
};

struct DegenerateQuadratic : Error {
  using Error::Error;
};

struct IntegrandSingular : Error {
  IntegrandSingular(const std::string& what, double where)
      : Error(what), where(where) {}
  double where;
};

struct OutOfCatalog : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct NotApplicableCase : Error {
  using Error::Error;
};

struct NegativeNormalization : Error {
  using Error::Error;
};

struct QuadratureNotConverged : Error {
  using Error::Error;
};

struct OutsideRealityWindow : Error {
  OutsideRealityWindow(const std::string& what, double lower, double upper)
      : Error(what), lower(lower), upper(upper) {}
  double lower;
  double upper;
};

}  // namespace ncqosc
