#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "ncqosc/scenario.hpp"

namespace ncqosc {

/// Accumulated phase of the eigenstate tower (n, l), with m = n + l:
///   Theta_{n,l}(t) = m * integral_0^t [c(T) - a(T)/rho(T)^2] dT.
/// Adaptive Gauss-Kronrod quadrature; exactly zero when m = 0.
double phase_quadrature(const CaseContext& ctx, int n, int l, double t,
                        double rel_tol = 1e-12, double* error = nullptr);

/// Elementary closed form of the phase; available for set1-case1,
/// set1-case2, set1-case3 and set2-case2 only (throws OutOfCatalog
/// otherwise). Inverse-tanh terms whose arguments exceed 1 are evaluated
/// through the complex principal branch as paired differences; the residual
/// imaginary part is checked against 1e-10 before being discarded.
double phase_closed_form(const CaseContext& ctx, int n, int l, double t);

struct PhaseSeries {
  std::vector<double> grid;
  std::vector<double> theta_quad;
  std::optional<std::vector<double>> theta_closed;
  int n = 0;
  int l = 0;
};

PhaseSeries phase_series(const CaseContext& ctx, int n, int l,
                         const std::vector<double>& grid);

/// psi = e^{i Theta_{n,m-n}(t)} phi_{n,m-n}(r, ang) using the quadrature
/// phase.
std::complex<double> eigenstate_assemble(const CaseContext& ctx, int n, int m,
                                         double t, double r, double ang);

}  // namespace ncqosc
