#pragma once

#include <complex>
#include <vector>

#include "ncqosc/scenario.hpp"

namespace ncqosc {

/// Generalized Laguerre polynomial L_m^{(alpha)}(z) by the stable three-term
/// recurrence; alpha may be any real (including negative integers).
double laguerre(int m, double alpha, double z);

/// Tricomi function U(-m, b, z) for nonnegative integer m, via the
/// terminating-polynomial identity U(-m, b, z) = (-1)^m m! L_m^{(b-1)}(z).
double tricomi_U_poly(int m, double b_param, double z);

/// Snapshot of the invariant-eigenfunction data at one time.
struct EigenfunctionSpec {
  int n = 0;       // radial tower index, >= 0
  int m = 0;       // n + l, >= 0
  double rho = 1;  // EP scale, > 0
  double rho_dot = 0;
  double a = 1;    // kinetic coefficient, > 0
};

/// phi_{n,m-n}(r, ang) =
///   lambda_n (i rho)^m / sqrt(m!) r^{n-m} e^{i(m-n) ang}
///   e^{-(a - i rho rho_dot) r^2 / (2 a rho^2)} U(-m, 1-m+n, r^2/rho^2)
/// with lambda_n^2 = 1 / (pi n! rho^{2(n+1)}).
std::complex<double> eigenfunction(const EigenfunctionSpec& spec, double r,
                                   double ang);

/// Same function with (rho, rho_dot, a) taken from the context's EP family.
std::complex<double> eigenfunction(const CaseContext& ctx, int n, int m,
                                   double t, double r, double ang);

/// Per-family specialized evaluation: the exponent, normalization and
/// polynomial argument are written directly in the family's analytic
/// variables rather than through the generic (rho, rho_dot, a) snapshot.
/// Agrees with the generic route to machine precision.
std::complex<double> eigenfunction_family(const CaseContext& ctx, int n, int m,
                                          double t, double r, double ang);

struct OrthoQuadConfig {
  int radial_nodes = 32;
  int angular_nodes = 24;
  double tol = 1e-8;  // convergence: doubled-node refinement must agree
};

/// <phi_A | phi_B> at common time t over the plane (r dr dang measure).
/// Gauss-Laguerre in s = r^2/rho^2, Gauss-Legendre in angle. Throws
/// QuadratureNotConverged if refinement moves the value by more than tol.
std::complex<double> orthonormality_integral(const EigenfunctionSpec& A,
                                             const EigenfunctionSpec& B,
                                             const OrthoQuadConfig& cfg = {});

struct RatioField {
  std::vector<std::complex<double>> ratio;  // (I phi)/phi at kept nodes
  std::complex<double> mean{0.0, 0.0};
  double spread = 0.0;  // max |ratio - mean| / max(1, |mean|)
  int skipped = 0;      // nodes dropped because |phi| was too small
};

/// Applies the invariant operator in polar coordinates,
///   I phi = [xi2 r^2/rho^2 + (rho_dot/a)^2 r^2] phi
///           - rho^2 (phi_rr + phi_r / r)
///           + (2 i rho rho_dot / a)(r phi_r + phi)
///           - (rho^2 / r^2) phi_angang,
/// by centered finite differences (radial step h*rho, angular step h) and
/// returns the pointwise ratio (I phi)/phi over the grid product
/// r_samples x ang_samples. For an eigenfunction the ratio is constant up to
/// O(h^2).
RatioField invariant_apply_polar(const EigenfunctionSpec& spec, double xi2,
                                 const std::vector<double>& r_samples,
                                 const std::vector<double>& ang_samples,
                                 double h = 1e-3);

}  // namespace ncqosc
