#include "ncqosc/ep.hpp"

#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <sstream>

#include "ncqosc/errors.hpp"

namespace ncqosc {

namespace {

double derive_mu(double num, double den, const char* which) {
  if (den <= 0.0) {
    std::ostringstream os;
    os << which << ": constraint denominator " << den
       << " <= 0, mu is not real";
    throw ConstraintViolated(os.str(), den);
  }
  return std::pow(num / den, 0.25);
}

void check_mu_hint(double mu_hint, double mu_derived, const char* which) {
  if (mu_hint <= 0.0) return;  // mu left to the constraint
  const double rel = std::abs(std::pow(mu_hint, 4) - std::pow(mu_derived, 4)) /
                     std::pow(mu_derived, 4);
  if (rel > 1e-12) {
    std::ostringstream os;
    os << which << ": supplied mu = " << mu_hint
       << " violates the family constraint (relative residual " << rel << ")";
    throw ConstraintViolated(os.str(), rel);
  }
}

}  // namespace

EPFamily EPFamily::exponential_set1(double sigma, double Delta,
                                    double vartheta, double xi2,
                                    double mu_hint) {
  if (sigma <= 0.0 || Delta <= 0.0 || xi2 <= 0.0 || vartheta < 0.0) {
    throw DomainError("exponential_set1: requires sigma, Delta, xi2 > 0 and vartheta >= 0");
  }
  EPFamily ep;
  ep.kind = Kind::ExponentialSetI;
  ep.sigma = sigma;
  ep.Delta = Delta;
  ep.vartheta = vartheta;
  ep.xi2 = xi2;
  // mu^4 (4 sigma Delta - vartheta^2) = 4 xi2 sigma^2
  ep.mu = derive_mu(4.0 * xi2 * sigma * sigma,
                    4.0 * sigma * Delta - vartheta * vartheta,
                    "exponential_set1");
  check_mu_hint(mu_hint, ep.mu, "exponential_set1");
  ep.mu_was_derived = (mu_hint <= 0.0);
  return ep;
}

EPFamily EPFamily::rational_set2(double sigma, double Delta, double Gamma,
                                 double chi, int k, double xi2,
                                 double mu_hint) {
  if (sigma <= 0.0 || Delta <= 0.0 || xi2 <= 0.0 || chi <= 0.0) {
    throw DomainError("rational_set2: requires sigma, Delta, xi2, chi > 0");
  }
  if (k == 0 || k == -2) {
    throw DomainError("rational_set2: exponent k must be nonzero and != -2 (use rational_critical)");
  }
  EPFamily ep;
  ep.kind = Kind::RationalSetII;
  ep.sigma = sigma;
  ep.Delta = Delta;
  ep.Gamma = Gamma;
  ep.chi = chi;
  ep.k = k;
  ep.xi2 = xi2;
  // Gamma^2 mu = (k+2)^2 (sigma Delta mu - xi2 sigma^2 / mu^3)
  const double kk = (k + 2.0) * (k + 2.0);
  ep.mu = derive_mu(kk * xi2 * sigma * sigma,
                    kk * sigma * Delta - Gamma * Gamma, "rational_set2");
  check_mu_hint(mu_hint, ep.mu, "rational_set2");
  ep.mu_was_derived = (mu_hint <= 0.0);
  return ep;
}

EPFamily EPFamily::rational_critical(double sigma, double Delta, double Gamma,
                                     double chi, double xi2, double mu_hint) {
  if (sigma <= 0.0 || Delta <= 0.0 || xi2 <= 0.0 || chi <= 0.0) {
    throw DomainError("rational_critical: requires sigma, Delta, xi2, chi > 0");
  }
  EPFamily ep;
  ep.kind = Kind::RationalCritical;
  ep.sigma = sigma;
  ep.Delta = Delta;
  ep.Gamma = Gamma;
  ep.chi = chi;
  ep.k = -2;
  ep.xi2 = xi2;
  // -mu^4 Gamma^2 + 4 sigma Delta mu^4 = 4 xi2 sigma^2
  ep.mu = derive_mu(4.0 * xi2 * sigma * sigma,
                    4.0 * sigma * Delta - Gamma * Gamma, "rational_critical");
  check_mu_hint(mu_hint, ep.mu, "rational_critical");
  ep.mu_was_derived = (mu_hint <= 0.0);
  return ep;
}

namespace {

double rational_base(double Gamma, double chi, double t) {
  const double s = Gamma * t + chi;
  if (s <= 0.0) {
    throw SingularDenominator("EPFamily: Gamma*t + chi <= 0");
  }
  return s;
}

}  // namespace

double EPFamily::a(double t) const {
  switch (kind) {
    case Kind::ExponentialSetI:
      return sigma * std::exp(-vartheta * t);
    case Kind::RationalSetII: {
      const double s = rational_base(Gamma, chi, t);
      const double e = (k + 2.0) / k;
      return sigma * std::pow(1.0 + 2.0 / k, e) * std::pow(s, -e);
    }
    case Kind::RationalCritical:
      return sigma;
  }
  return 0.0;
}

double EPFamily::a_dot(double t) const {
  switch (kind) {
    case Kind::ExponentialSetI:
      return -vartheta * a(t);
    case Kind::RationalSetII: {
      const double s = rational_base(Gamma, chi, t);
      return -((k + 2.0) / k) * Gamma / s * a(t);
    }
    case Kind::RationalCritical:
      return 0.0;
  }
  return 0.0;
}

double EPFamily::b(double t) const {
  switch (kind) {
    case Kind::ExponentialSetI:
      return Delta * std::exp(vartheta * t);
    case Kind::RationalSetII: {
      const double s = rational_base(Gamma, chi, t);
      const double e = (k - 2.0) / k;
      return Delta * std::pow(k / (k + 2.0), (2.0 - k) / k) * std::pow(s, -e);
    }
    case Kind::RationalCritical: {
      const double s = rational_base(Gamma, chi, t);
      return Delta / (s * s);
    }
  }
  return 0.0;
}

double EPFamily::rho(double t) const {
  switch (kind) {
    case Kind::ExponentialSetI:
      return mu * std::exp(-vartheta * t / 2.0);
    case Kind::RationalSetII: {
      const double s = rational_base(Gamma, chi, t);
      return mu * std::pow(1.0 + 2.0 / k, 1.0 / k) * std::pow(s, -1.0 / k);
    }
    case Kind::RationalCritical: {
      const double s = rational_base(Gamma, chi, t);
      return mu * std::sqrt(s);
    }
  }
  return 0.0;
}

double EPFamily::rho_dot(double t) const {
  switch (kind) {
    case Kind::ExponentialSetI:
      return -vartheta / 2.0 * rho(t);
    case Kind::RationalSetII: {
      const double s = rational_base(Gamma, chi, t);
      return -(1.0 / k) * Gamma / s * rho(t);
    }
    case Kind::RationalCritical: {
      const double s = rational_base(Gamma, chi, t);
      return mu * Gamma / (2.0 * std::sqrt(s));
    }
  }
  return 0.0;
}

double EPFamily::rho_ddot(double t) const {
  switch (kind) {
    case Kind::ExponentialSetI:
      return vartheta * vartheta / 4.0 * rho(t);
    case Kind::RationalSetII: {
      const double s = rational_base(Gamma, chi, t);
      const double e = 1.0 / k;
      return e * (e + 1.0) * Gamma * Gamma / (s * s) * rho(t);
    }
    case Kind::RationalCritical: {
      const double s = rational_base(Gamma, chi, t);
      return -mu * Gamma * Gamma / (4.0 * std::pow(s, 1.5));
    }
  }
  return 0.0;
}

double EPFamily::constraint_residual() const {
  double lhs = 0.0, rhs = 0.0;
  const double mu4 = std::pow(mu, 4);
  switch (kind) {
    case Kind::ExponentialSetI:
      lhs = mu4 * (4.0 * sigma * Delta - vartheta * vartheta);
      rhs = 4.0 * xi2 * sigma * sigma;
      break;
    case Kind::RationalSetII: {
      // multiply through by mu^3 and group the large terms first to avoid
      // cancellation between sigma*Delta*mu and xi2*sigma^2/mu^3
      const double kk = (k + 2.0) * (k + 2.0);
      lhs = mu4 * (kk * sigma * Delta - Gamma * Gamma);
      rhs = kk * xi2 * sigma * sigma;
      break;
    }
    case Kind::RationalCritical:
      lhs = -mu4 * Gamma * Gamma + 4.0 * sigma * Delta * mu4;
      rhs = 4.0 * xi2 * sigma * sigma;
      break;
  }
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  return std::abs(lhs - rhs) / scale;
}

double ep_residual(double a, double a_dot, double b, double rho,
                   double rho_dot, double rho_ddot, double xi2) {
  if (a == 0.0) throw SingularDenominator("ep_residual: a == 0");
  if (rho == 0.0) throw SingularDenominator("ep_residual: rho == 0");
  return rho_ddot - (a_dot / a) * rho_dot + a * b * rho -
         xi2 * a * a / (rho * rho * rho);
}

EPSolutionNumeric ep_integrate(const std::function<double(double)>& a,
                               const std::function<double(double)>& a_dot,
                               const std::function<double(double)>& b,
                               double rho0, double rho_dot0, double xi2,
                               const std::vector<double>& grid, double tol) {
  if (rho0 <= 0.0) throw DomainError("ep_integrate: rho0 must be positive");
  if (grid.size() < 2) throw DomainError("ep_integrate: grid needs >= 2 samples");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (grid[i] <= grid[i - 1]) {
      throw DomainError("ep_integrate: grid must be strictly increasing");
    }
  }

  using state_type = std::array<double, 2>;
  auto rhs = [&](const state_type& y, state_type& dy, double t) {
    const double rho = y[0];
    if (!(rho > 0.0) || !std::isfinite(rho)) {
      throw BlowUp("ep_integrate: rho reached zero", t);
    }
    const double at = a(t);
    if (at == 0.0) throw SingularDenominator("ep_integrate: a(t) == 0");
    dy[0] = y[1];
    dy[1] = (a_dot(t) / at) * y[1] - at * b(t) * rho +
            xi2 * at * at / (rho * rho * rho);
  };

  EPSolutionNumeric sol;
  sol.xi2 = xi2;
  sol.grid = grid;
  sol.rho.reserve(grid.size());
  sol.rho_dot.reserve(grid.size());

  state_type y{rho0, rho_dot0};
  auto stepper = boost::numeric::odeint::make_controlled(
      tol, tol, boost::numeric::odeint::runge_kutta_cash_karp54<state_type>());
  const double dt0 = std::min(1e-3, (grid.back() - grid.front()) / 100.0);
  boost::numeric::odeint::integrate_times(
      stepper, rhs, y, grid.begin(), grid.end(), dt0,
      [&](const state_type& yi, double /*t*/) {
        sol.rho.push_back(yi[0]);
        sol.rho_dot.push_back(yi[1]);
      });
  return sol;
}

InvariantCoefficients invariant_coefficients(double a, double rho,
                                             double rho_dot, double xi2) {
  if (a == 0.0) throw SingularDenominator("invariant_coefficients: a == 0");
  if (rho == 0.0) throw SingularDenominator("invariant_coefficients: rho == 0");
  InvariantCoefficients c;
  c.alpha = rho * rho;
  c.gamma = -2.0 * rho * rho_dot / a;
  c.beta = (rho_dot * rho_dot / a + xi2 * a / (rho * rho)) / a;
  return c;
}

InvariantCoefficients invariant_coefficients(const EPFamily& ep, double t) {
  return invariant_coefficients(ep.a(t), ep.rho(t), ep.rho_dot(t), ep.xi2);
}

InvariantCoefficients invariant_coefficients(
    const EPSolutionNumeric& sol, std::size_t index,
    const std::function<double(double)>& a) {
  if (index >= sol.grid.size()) {
    throw DomainError("invariant_coefficients: index out of range");
  }
  return invariant_coefficients(a(sol.grid[index]), sol.rho[index],
                                sol.rho_dot[index], sol.xi2);
}

std::array<double, 3> invariant_ode_residuals(const EPFamily& ep, double t,
                                              double h_scale) {
  const double h = h_scale * std::max(1.0, std::abs(t));
  const InvariantCoefficients cm = invariant_coefficients(ep, t - h);
  const InvariantCoefficients c0 = invariant_coefficients(ep, t);
  const InvariantCoefficients cp = invariant_coefficients(ep, t + h);

  const double alpha_dot = (cp.alpha - cm.alpha) / (2.0 * h);
  const double beta_dot = (cp.beta - cm.beta) / (2.0 * h);
  const double gamma_dot = (cp.gamma - cm.gamma) / (2.0 * h);

  const double a = ep.a(t);
  const double b = ep.b(t);

  auto rel = [](double lhs, double rhs, double extra_scale) {
    const double scale =
        std::max({std::abs(lhs), std::abs(rhs), extra_scale, 1e-300});
    return std::abs(lhs - rhs) / scale;
  };

  const double r1 = rel(alpha_dot, -a * c0.gamma, 0.0);
  const double r2 = rel(beta_dot, b * c0.gamma, 0.0);
  // gamma' is a difference of two large products; scale by their magnitudes.
  const double r3 = rel(gamma_dot, 2.0 * (b * c0.alpha - c0.beta * a),
                        2.0 * (std::abs(b * c0.alpha) + std::abs(c0.beta * a)));
  return {r1, r2, r3};
}

}  // namespace ncqosc
