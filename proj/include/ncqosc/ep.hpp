#pragma once

#include <array>
#include <functional>
#include <vector>

namespace ncqosc {

/// Analytic solution family of the dissipative Ermakov-Pinney equation
///   rho'' - (a'/a) rho' + a b rho = xi^2 a^2 / rho^3.
///
/// The scale constant mu is always derived from the family constraint; the
/// factory functions reject an inconsistent user-supplied mu.
struct EPFamily {
  enum class Kind {
    ExponentialSetI,   // a = sigma e^{-vt t}, b = Delta e^{vt t}, rho = mu e^{-vt t/2}
    RationalSetII,     // power-law a, b, rho in (Gamma t + chi), exponent k
    RationalCritical,  // k = -2 limit: a = sigma, b = Delta/(Gt+chi)^2, rho = mu sqrt(Gt+chi)
  };

  Kind kind = Kind::ExponentialSetI;
  double sigma = 1.0;
  double Delta = 1.0;
  double xi2 = 1.0;
  double vartheta = 0.0;  // ExponentialSetI
  double Gamma = 0.0;     // rational families
  double chi = 1.0;       // rational families
  int k = 2;              // RationalSetII
  double mu = 1.0;        // derived from the constraint
  bool mu_was_derived = true;

  static EPFamily exponential_set1(double sigma, double Delta, double vartheta,
                                   double xi2 = 1.0, double mu_hint = 0.0);
  static EPFamily rational_set2(double sigma, double Delta, double Gamma,
                                double chi, int k, double xi2 = 1.0,
                                double mu_hint = 0.0);
  static EPFamily rational_critical(double sigma, double Delta, double Gamma,
                                    double chi, double xi2 = 1.0,
                                    double mu_hint = 0.0);

  double a(double t) const;
  double a_dot(double t) const;
  double b(double t) const;
  double rho(double t) const;
  double rho_dot(double t) const;
  double rho_ddot(double t) const;

  /// Relative residual of the family constraint equation.
  double constraint_residual() const;
};

/// Residual of the EP equation at one point:
///   rho_ddot - (a_dot/a) rho_dot + a b rho - xi2 a^2 / rho^3.
double ep_residual(double a, double a_dot, double b, double rho,
                   double rho_dot, double rho_ddot, double xi2);

struct EPSolutionNumeric {
  std::vector<double> grid;
  std::vector<double> rho;
  std::vector<double> rho_dot;
  double xi2 = 1.0;
};

/// Adaptive RK (Cash-Karp 4(5)) integration of the EP equation with
/// coefficients given as callables; samples are reported on `grid`.
/// Throws BlowUp if rho reaches zero.
EPSolutionNumeric ep_integrate(const std::function<double(double)>& a,
                               const std::function<double(double)>& a_dot,
                               const std::function<double(double)>& b,
                               double rho0, double rho_dot0, double xi2,
                               const std::vector<double>& grid,
                               double tol = 1e-10);

struct InvariantCoefficients {
  double alpha;  // rho^2
  double beta;   // (rho_dot^2/a + xi2 a/rho^2)/a
  double gamma;  // -2 rho rho_dot / a
};

InvariantCoefficients invariant_coefficients(double a, double rho,
                                             double rho_dot, double xi2);
InvariantCoefficients invariant_coefficients(const EPFamily& ep, double t);
InvariantCoefficients invariant_coefficients(const EPSolutionNumeric& sol,
                                             std::size_t index,
                                             const std::function<double(double)>& a);

/// Relative residuals of the coupled first-order system
///   alpha' = -a gamma,  beta' = b gamma,  gamma' = 2 (b alpha - beta a)
/// certified by centered finite differences with step h = h_scale*max(1,|t|).
std::array<double, 3> invariant_ode_residuals(const EPFamily& ep, double t,
                                              double h_scale = 1e-6);

}  // namespace ncqosc
