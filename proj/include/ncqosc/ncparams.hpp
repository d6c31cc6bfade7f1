#pragma once

#include "ncqosc/scenario.hpp"

namespace ncqosc {

enum class RootBranch { Plus, Minus };

/// Position-noncommutativity parameter theta from the quadratic
///   a_target = f/M + qBf/(2M) theta + 1/4 [q^2B^2 f/(4M) + M omega^2/f] theta^2.
/// Default branch is the "+sqrt" root. Throws NegativeRadicand when the
/// discriminant is negative; falls back to the linear root when the theta^2
/// coefficient vanishes (DegenerateQuadratic if the linear term vanishes too).
double solve_theta(double M, double q, double f, double omega, double B,
                   double a_target, double t,
                   RootBranch branch = RootBranch::Plus);

/// Momentum-noncommutativity parameter Omega from the quadratic
///   b_target = q^2B^2 f/(4M) + M omega^2/f + qBf/(2M) Omega + f/(4M) Omega^2.
double solve_omega(double M, double q, double f, double omega, double B,
                   double b_target, double t,
                   RootBranch branch = RootBranch::Plus);

/// Both parameters solved against the context's EP coefficient targets
/// a(t), b(t) at time t.
struct NCPair {
  double theta;
  double Omega;
  RootBranch branch;
};

NCPair nc_parameters(const CaseContext& ctx, double t,
                     RootBranch branch = RootBranch::Plus);

/// Cross-term coefficient c(t) assembled from the solved NC parameters:
///   c = 1/2 [qBf/M (1 + theta Omega/4) + Omega f/M
///            + (q^2B^2 f/(4M) + M omega^2/f) theta].
double coefficient_c(const CaseContext& ctx, double t);

/// The per-case elementary closed form of c(t); agrees with coefficient_c
/// to high relative accuracy on the case's validity window.
double coefficient_c_closed(const CaseContext& ctx, double t);

/// theta(t) * Omega(t) for the two cases where the product is a time
/// constant; throws NotApplicableCase otherwise.
double theta_omega_product(const CaseContext& ctx, double t);

}  // namespace ncqosc
