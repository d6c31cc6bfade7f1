#pragma once

#include <limits>
#include <string>
#include <vector>

#include "ncqosc/scenario.hpp"

namespace ncqosc {

/// Time interval on which every radicand of a case's formulas is
/// nonnegative; infinite endpoints mark inactive bounds.
struct RealityWindow {
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
  std::string source;  // which radicand binds, empty if unbounded

  bool contains(double t) const { return t >= lower && t <= upper; }
};

RealityWindow reality_window(const CaseContext& ctx);

/// Energy expectation in the (n, m) eigenstate:
///   <E> = 1/2 (n+m+1) [b rho^2 + a/rho^2 + rho_dot^2/a] + (n-m) c(t).
/// Throws OutsideRealityWindow when t lies outside the case's window.
double energy_general(const CaseContext& ctx, int n, int m, double t);

/// The per-case elementary form of the m = 0 tower energy; agrees with
/// energy_general(n, 0, t) on the window.
double energy_case_closed(const CaseContext& ctx, int n, double t);

/// Large-time limit of the set1-case1 (and B = 0) energy:
///   (n+1) mu^2 Delta + n [omega0 sqrt(M sigma - 1) + sqrt(Delta/M - omega0^2)].
double energy_set1_case1_asymptote(const CaseContext& ctx, int n);

struct EnergySeries {
  std::vector<double> grid;
  std::vector<double> value;
  CaseId id;
  int n = 1;
  int m = 0;
  RealityWindow window;
};

EnergySeries energy_case_series(const CaseContext& ctx, int n,
                                const std::vector<double>& grid);

struct ChargePair {
  double E_plus;
  double E_minus;
};

/// Energies of the same state with the particle charge flipped in sign.
ChargePair charge_asymmetry(const CaseContext& ctx, int n, int m, double t);

}  // namespace ncqosc
