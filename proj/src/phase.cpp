#include "ncqosc/phase.hpp"

#include <cmath>
#include <complex>

#include "ncqosc/errors.hpp"
#include "ncqosc/ncparams.hpp"
#include "ncqosc/quadrature.hpp"
#include "ncqosc/wavefunction.hpp"

namespace ncqosc {

namespace {

// Difference atanh(x1) - atanh(x0) through the complex principal branch.
// For |x| > 1 each term acquires an imaginary part +-pi/2; when both
// arguments sit on the same side the parts cancel in the difference. The
// residual imaginary part is checked before being discarded.
double atanh_pair(double x1, double x0) {
  const std::complex<double> d =
      std::atanh(std::complex<double>(x1, 0.0)) -
      std::atanh(std::complex<double>(x0, 0.0));
  if (std::abs(d.imag()) > 1e-10 * std::max(1.0, std::abs(d.real()))) {
    throw DomainError("phase_closed_form: atanh pair has a nonvanishing imaginary part");
  }
  return d.real();
}

double checked_sqrt(double x, double t, const char* what) {
  if (x < 0.0) throw NegativeRadicand(std::string("phase_closed_form: ") + what, t, x);
  return std::sqrt(x);
}

// Shared Set-I Case I / Case III skeleton; Case III is Case I with the decay
// rate doubled inside the integrand, which halves every 1/Gamma prefactor.
double set1_decaying_phase(const CaseContext& ctx, double nl, double t,
                           double rate) {
  const ScenarioParams& p = ctx.params;
  const double M = p.M, q = p.q, B0 = p.B0, w0 = p.omega0;
  const double sig = p.sigma, Del = p.Delta_c;
  const double mu2 = ctx.ep.mu * ctx.ep.mu;
  const double qB = q * B0;

  const double Ms1 = M * sig - 1.0;
  const double E = std::exp(rate * t);
  const double r0 = checked_sqrt(qB * qB * sig / (4.0 * M) + w0 * w0 * Ms1, t,
                                 "theta radicand at 0");
  const double rt = checked_sqrt(
      qB * qB * sig / (4.0 * M) + w0 * w0 * Ms1 * E * E, t, "theta radicand");
  const double root_bD = checked_sqrt(M * Del - M * M * w0 * w0, t,
                                      "M*Delta - M^2 w0^2");
  const double sMs = checked_sqrt(Ms1, t, "M*sigma - 1");

  double res = nl * (checked_sqrt(Del / M - w0 * w0, t, "Delta/M - w0^2") -
                     sig / mu2) * t;
  res += nl * w0 * sMs / rate *
         std::log((w0 * sMs * E + rt) / (w0 * sMs + r0));
  res += nl * w0 / rate * (std::atan(w0 * E / rt) - std::atan(w0 / r0));
  res += nl * root_bD / (M * rate) *
         atanh_pair(2.0 * M * rt / qB, 2.0 * M * r0 / qB);
  res -= nl * checked_sqrt((Del - M * w0 * w0) * sig, t, "(Delta - M w0^2) sigma") /
         rate *
         atanh_pair(
             std::sqrt((qB * qB * sig + 4.0 * M * w0 * w0 * Ms1 * E * E) /
                       (qB * qB * sig)),
             std::sqrt((qB * qB * sig + 4.0 * M * w0 * w0 * Ms1) /
                       (qB * qB * sig)));
  res -= nl * w0 / rate *
         (std::atan(2.0 * M * w0 * E / qB) - std::atan(2.0 * M * w0 / qB));
  res += nl * root_bD / (2.0 * rate * M) *
         std::log((qB * qB / (E * E) + 4.0 * M * M * w0 * w0) /
                  (qB * qB + 4.0 * M * M * w0 * w0));
  return res;
}

}  // namespace

double phase_quadrature(const CaseContext& ctx, int n, int l, double t,
                        double rel_tol, double* error) {
  if (n < 0 || n + l < 0) throw DomainError("phase_quadrature: need n >= 0 and n + l >= 0");
  const int m = n + l;
  if (m == 0) {
    if (error) *error = 0.0;
    return 0.0;
  }
  auto integrand = [&](double T) {
    const double rho = ctx.ep.rho(T);
    return coefficient_c(ctx, T) - ctx.ep.a(T) / (rho * rho);
  };
  return m * integrate_adaptive(integrand, 0.0, t, rel_tol, error);
}

double phase_closed_form(const CaseContext& ctx, int n, int l, double t) {
  if (n < 0 || n + l < 0) throw DomainError("phase_closed_form: need n >= 0 and n + l >= 0");
  const double nl = n + l;
  if (nl == 0) return 0.0;
  const ScenarioParams& p = ctx.params;
  const double mu2 = ctx.ep.mu * ctx.ep.mu;

  if (ctx.id.family == Family::SetI) {
    switch (ctx.id.tag) {
      case CaseTag::I:
        return set1_decaying_phase(ctx, nl, t, p.Gamma);
      case CaseTag::II: {
        // c is a time constant, so the phase is strictly linear in t.
        const double c0 = coefficient_c_closed(ctx, 0.0);
        return nl * (c0 - p.sigma / mu2) * t;
      }
      case CaseTag::III:
        return set1_decaying_phase(ctx, nl, t, 2.0 * p.Gamma);
      default:
        throw OutOfCatalog("phase_closed_form: set1-case4 has no elementary closed form");
    }
  }
  if (ctx.id.tag == CaseTag::II) {
    const double S = p.Gamma * t + p.chi;
    if (S <= 0.0) throw SingularDenominator("phase_closed_form: Gamma*t + chi <= 0");
    // c(t) = c_const/S and a/rho^2 = sigma/(mu^2 S); both integrate to logs.
    const double c_const = coefficient_c_closed(ctx, 0.0) * p.chi;
    return nl * (c_const - p.sigma / mu2) * std::log(S / p.chi) / p.Gamma;
  }
  throw OutOfCatalog("phase_closed_form: set2-case1 has no elementary closed form");
}

PhaseSeries phase_series(const CaseContext& ctx, int n, int l,
                         const std::vector<double>& grid) {
  PhaseSeries series;
  series.n = n;
  series.l = l;
  series.grid = grid;
  series.theta_quad.reserve(grid.size());
  for (double t : grid) series.theta_quad.push_back(phase_quadrature(ctx, n, l, t));

  const bool closed = (ctx.id.family == Family::SetI && ctx.id.tag != CaseTag::IV) ||
                      (ctx.id.family == Family::SetII && ctx.id.tag == CaseTag::II);
  if (closed) {
    std::vector<double> vals;
    vals.reserve(grid.size());
    for (double t : grid) vals.push_back(phase_closed_form(ctx, n, l, t));
    series.theta_closed = std::move(vals);
  }
  return series;
}

std::complex<double> eigenstate_assemble(const CaseContext& ctx, int n, int m,
                                         double t, double r, double ang) {
  const double theta = phase_quadrature(ctx, n, m - n, t);
  return std::exp(std::complex<double>(0.0, theta)) *
         eigenfunction(ctx, n, m, t, r, ang);
}

}  // namespace ncqosc
