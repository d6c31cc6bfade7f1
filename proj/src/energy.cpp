#include "ncqosc/energy.hpp"

#include <cmath>

#include "ncqosc/errors.hpp"
#include "ncqosc/ncparams.hpp"

namespace ncqosc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_window(const RealityWindow& w, double t, const char* who) {
  if (!w.contains(t)) {
    throw OutsideRealityWindow(std::string(who) + ": t outside the reality window",
                               w.lower, w.upper);
  }
}

}  // namespace

RealityWindow reality_window(const CaseContext& ctx) {
  const ScenarioParams& p = ctx.params;
  const double M = p.M, q = p.q, B0 = p.B0, w0 = p.omega0, G = p.Gamma;
  const double sig = p.sigma, Del = p.Delta_c;
  RealityWindow w;

  if (ctx.id.family == Family::SetI) {
    // theta radicand: q^2B0^2 sig E^2/(4M) + w^2 (M sig - 1) with E the
    // case's field decay factor; only decaying E can turn it negative, and
    // only when M sig < 1.
    const double log_arg =
        q * q * B0 * B0 * sig / (4.0 * M * w0 * w0 * (1.0 - M * sig));
    switch (ctx.id.tag) {
      case CaseTag::I:
        if (M * sig < 1.0 && B0 > 0.0) {
          w.upper = std::log(log_arg) / (2.0 * G);
          w.source = "field-decay theta radicand";
        }
        break;
      case CaseTag::II:
        break;  // all radicands time-constant
      case CaseTag::III:
        if (M * sig < 1.0 && B0 > 0.0) {
          w.upper = std::log(log_arg) / (4.0 * G);
          w.source = "field-decay theta radicand";
        }
        break;
      case CaseTag::IV: {
        // two lower bounds; the greater one binds
        const double t1 = std::log(M * w0 * w0 / Del) / G;
        double lower = t1;
        std::string src = "frequency radicand M*Delta - M^2 w^2";
        if (M * sig < 1.0 && B0 > 0.0) {
          const double t2 = std::log(4.0 * M * w0 * w0 * (1.0 - M * sig) /
                                     (q * q * B0 * B0 * sig)) / G;
          if (t2 > lower) {
            lower = t2;
            src = "theta radicand";
          }
        }
        if (lower > 0.0 || t1 > -kInf) {
          w.lower = lower;
          w.source = src;
        }
        break;
      }
    }
    return w;
  }

  if (ctx.id.tag == CaseTag::I) {
    // M Delta S^2 - M^2 w0^2 >= 0 gives the lower bound; the theta radicand
    // q^2B0^2 sig/M - w0^2 S^2 + 4 w0^2 sig M >= 0 gives the upper one.
    w.lower = (w0 * std::sqrt(M / Del) - p.chi) / G;
    w.upper = (std::sqrt(q * q * B0 * B0 * sig / (M * w0 * w0) + 4.0 * sig * M) -
               p.chi) / G;
    w.source = "rational-frequency radicands";
  }
  return w;
}

double energy_general(const CaseContext& ctx, int n, int m, double t) {
  if (n < 0 || m < 0) throw DomainError("energy_general: n, m must be >= 0");
  check_window(reality_window(ctx), t, "energy_general");
  const double a = ctx.ep.a(t);
  const double b = ctx.ep.b(t);
  const double rho = ctx.ep.rho(t);
  const double rd = ctx.ep.rho_dot(t);
  const double bracket = b * rho * rho + a / (rho * rho) + rd * rd / a;
  const double c = (n == m) ? 0.0 : coefficient_c(ctx, t);
  return 0.5 * (n + m + 1) * bracket + (n - m) * c;
}

double energy_case_closed(const CaseContext& ctx, int n, double t) {
  if (n < 0) throw DomainError("energy_case_closed: n must be >= 0");
  check_window(reality_window(ctx), t, "energy_case_closed");
  const ScenarioParams& p = ctx.params;
  const double mu2 = ctx.ep.mu * ctx.ep.mu;
  const double c = coefficient_c_closed(ctx, t);

  if (ctx.id.family == Family::SetI) {
    return (n + 1) * mu2 * p.Delta_c + n * c;
  }
  const double S = p.Gamma * t + p.chi;
  if (S <= 0.0) throw SingularDenominator("energy_case_closed: Gamma*t + chi <= 0");
  if (ctx.id.tag == CaseTag::I) {
    const double bracket = 2.0 * (p.sigma / mu2 + p.Delta_c * mu2) +
                           mu2 * p.Gamma * p.Gamma / (8.0 * p.sigma);
    return (n + 1) * bracket / (2.0 * S) + n * c;
  }
  return (n + 1) * mu2 * p.Delta_c / S + n * c;
}

double energy_set1_case1_asymptote(const CaseContext& ctx, int n) {
  const ScenarioParams& p = ctx.params;
  const double mu2 = ctx.ep.mu * ctx.ep.mu;
  const double t1 = p.M * p.sigma - 1.0;
  const double t2 = p.Delta_c / p.M - p.omega0 * p.omega0;
  if (t1 < 0.0 || t2 < 0.0) {
    throw NegativeRadicand("energy_set1_case1_asymptote: negative radicand", kInf,
                           std::min(t1, t2));
  }
  return (n + 1) * mu2 * p.Delta_c +
         n * (p.omega0 * std::sqrt(t1) + std::sqrt(t2));
}

EnergySeries energy_case_series(const CaseContext& ctx, int n,
                                const std::vector<double>& grid) {
  EnergySeries series;
  series.id = ctx.id;
  series.n = n;
  series.m = 0;
  series.window = reality_window(ctx);
  series.grid = grid;
  series.value.reserve(grid.size());
  for (double t : grid) series.value.push_back(energy_case_closed(ctx, n, t));
  return series;
}

ChargePair charge_asymmetry(const CaseContext& ctx, int n, int m, double t) {
  ScenarioParams flipped = ctx.params;
  flipped.q = -flipped.q;
  const CaseContext ctx_minus = catalog(ctx.id, flipped);
  ChargePair pair;
  pair.E_plus = energy_general(ctx, n, m, t);
  pair.E_minus = energy_general(ctx_minus, n, m, t);
  return pair;
}

}  // namespace ncqosc
