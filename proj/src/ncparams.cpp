#include "ncqosc/ncparams.hpp"

#include <cmath>

#include "ncqosc/errors.hpp"

namespace ncqosc {

namespace {

double quadratic_root(double A, double Bc, double C, double t,
                      RootBranch branch, const char* who) {
  if (A == 0.0) {
    if (Bc == 0.0) throw DegenerateQuadratic(std::string(who) + ": both quadratic and linear coefficients vanish");
    return -C / Bc;
  }
  const double disc = Bc * Bc - 4.0 * A * C;
  if (disc < 0.0) throw NegativeRadicand(std::string(who) + ": negative discriminant", t, disc);
  const double root = std::sqrt(disc);
  return (branch == RootBranch::Plus) ? (-Bc + root) / (2.0 * A)
                                      : (-Bc - root) / (2.0 * A);
}

double checked_sqrt(double x, double t, const char* what) {
  if (x < 0.0) throw NegativeRadicand(std::string("coefficient_c_closed: ") + what, t, x);
  return std::sqrt(x);
}

}  // namespace

double solve_theta(double M, double q, double f, double omega, double B,
                   double a_target, double t, RootBranch branch) {
  if (f <= 0.0) throw NonPositiveDamping("solve_theta: f <= 0");
  const double A = 0.25 * (q * q * B * B * f / (4.0 * M) + M * omega * omega / f);
  const double Bc = q * B * f / (2.0 * M);
  const double C = f / M - a_target;
  return quadratic_root(A, Bc, C, t, branch, "solve_theta");
}

double solve_omega(double M, double q, double f, double omega, double B,
                   double b_target, double t, RootBranch branch) {
  if (f <= 0.0) throw NonPositiveDamping("solve_omega: f <= 0");
  const double A = f / (4.0 * M);
  const double Bc = q * B * f / (2.0 * M);
  const double C = q * q * B * B * f / (4.0 * M) + M * omega * omega / f - b_target;
  return quadratic_root(A, Bc, C, t, branch, "solve_omega");
}

NCPair nc_parameters(const CaseContext& ctx, double t, RootBranch branch) {
  const ScenarioParams& p = ctx.params;
  const double f = ctx.f.value(t);
  const double w = ctx.omega.value(t);
  const double B = ctx.B.value(t);
  NCPair nc;
  nc.theta = solve_theta(p.M, p.q, f, w, B, ctx.ep.a(t), t, branch);
  nc.Omega = solve_omega(p.M, p.q, f, w, B, ctx.ep.b(t), t, branch);
  nc.branch = branch;
  return nc;
}

double coefficient_c(const CaseContext& ctx, double t) {
  const ScenarioParams& p = ctx.params;
  const double f = ctx.f.value(t);
  const double w = ctx.omega.value(t);
  const double B = ctx.B.value(t);
  const NCPair nc = nc_parameters(ctx, t);
  const double A = p.q * p.q * B * B * f / (4.0 * p.M) + p.M * w * w / f;
  return 0.5 * (p.q * B * f / p.M * (1.0 + nc.theta * nc.Omega / 4.0) +
                nc.Omega * f / p.M + A * nc.theta);
}

double coefficient_c_closed(const CaseContext& ctx, double t) {
  const ScenarioParams& p = ctx.params;
  const double M = p.M, q = p.q, B0 = p.B0, w0 = p.omega0, G = p.Gamma;
  const double sig = p.sigma, Del = p.Delta_c;

  if (ctx.id.family == Family::SetI) {
    // Cases I-IV share one skeleton: with E the case-specific decay factor,
    //   c = [ (4M^2 w^2 + 2qB0 E sqrt(M Del - M^2 w^2)) R
    //         - 2qB0 M w^2 E - (q^2B0^2/M) E^2 sqrt(M Del - M^2 w^2) ]
    //       / (q^2B0^2 E^2 + 4M^2 w^2) + sqrt(Del/M - w^2)
    // where R = sqrt(q^2B0^2 sig E^2/(4M) + w^2 (M sig - 1)) and w is the
    // (possibly decaying) frequency.
    double E, w2;
    switch (ctx.id.tag) {
      case CaseTag::I:
        E = std::exp(-G * t);
        w2 = w0 * w0;
        break;
      case CaseTag::II:
        E = 1.0;
        w2 = w0 * w0;
        break;
      case CaseTag::III:
        E = std::exp(-2.0 * G * t);
        w2 = w0 * w0;
        break;
      case CaseTag::IV:
        E = 1.0;
        w2 = w0 * w0 * std::exp(-G * t);
        break;
      default:
        throw UnknownCase("coefficient_c_closed: bad Set-I tag");
    }
    const double root_bD = checked_sqrt(M * Del - M * M * w2, t, "M*Delta - M^2 w^2");
    const double R = checked_sqrt(
        q * q * B0 * B0 * sig * E * E / (4.0 * M) + w2 * (M * sig - 1.0), t,
        "theta radicand");
    const double denom = q * q * B0 * B0 * E * E + 4.0 * M * M * w2;
    const double num = (4.0 * M * M * w2 + 2.0 * q * B0 * E * root_bD) * R -
                       2.0 * q * B0 * M * w2 * E -
                       q * q * B0 * B0 / M * E * E * root_bD;
    return num / denom + checked_sqrt(Del / M - w2, t, "Delta/M - w^2");
  }

  const double S = G * t + p.chi;
  if (S <= 0.0) throw SingularDenominator("coefficient_c_closed: Gamma*t + chi <= 0");
  if (ctx.id.tag == CaseTag::I) {
    const double root_bD = checked_sqrt(M * Del * S * S - M * M * w0 * w0, t,
                                        "M*Delta*S^2 - M^2 w0^2");
    const double R = checked_sqrt(
        q * q * B0 * B0 * sig / M - w0 * w0 * S * S + 4.0 * w0 * w0 * sig * M,
        t, "theta radicand");
    const double denom = 4.0 * M * M * w0 * w0 + q * q * B0 * B0;
    const double num =
        (4.0 * M * M * w0 * w0 / (S * S) + 2.0 * q * B0 * root_bD / (S * S)) * R -
        2.0 * q * B0 * M * w0 * w0 / S - q * q * B0 * B0 * root_bD / (M * S);
    return num / denom +
           checked_sqrt(Del / M - w0 * w0 / (S * S), t, "Delta/M - w^2");
  }
  // Set-II Case II: the Set-I Case II constant divided by S.
  const double root_bD = checked_sqrt(M * Del - M * M * w0 * w0, t, "M*Delta - M^2 w0^2");
  const double R = checked_sqrt(
      q * q * B0 * B0 * sig / (4.0 * M) + w0 * w0 * (M * sig - 1.0), t,
      "theta radicand");
  const double denom = (4.0 * M * M * w0 * w0 + q * q * B0 * B0) * S;
  const double num = (4.0 * M * M * w0 * w0 + 2.0 * q * B0 * root_bD) * R -
                     2.0 * q * B0 * M * w0 * w0 - q * q * B0 * B0 * root_bD / M;
  return num / denom + checked_sqrt(Del / M - w0 * w0, t, "Delta/M - w0^2") / S;
}

double theta_omega_product(const CaseContext& ctx, double t) {
  const bool applicable =
      (ctx.id.family == Family::SetI && ctx.id.tag == CaseTag::II) ||
      (ctx.id.family == Family::SetII && ctx.id.tag == CaseTag::II);
  if (!applicable) {
    throw NotApplicableCase(
        "theta_omega_product: constant only for set1-case2 and set2-case2");
  }
  const NCPair nc = nc_parameters(ctx, t);
  return nc.theta * nc.Omega;
}

}  // namespace ncqosc
