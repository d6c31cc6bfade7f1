#include "ncqosc/wavefunction.hpp"

#include <cmath>

#include "ncqosc/errors.hpp"
#include "ncqosc/quadrature.hpp"

namespace ncqosc {

namespace {

double laguerre_recurrence(int m, double alpha, double z) {
  if (m == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - z;
  for (int k = 1; k < m; ++k) {
    const double next =
        ((2.0 * k + 1.0 + alpha - z) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double factorial(int n) { return std::tgamma(n + 1.0); }

std::complex<double> unit_i_pow(int m) {
  switch (((m % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

double laguerre(int m, double alpha, double z) {
  if (m < 0) throw DomainError("laguerre: m < 0");
  // For negative-integer alpha = -j with j <= m the leading recurrence terms
  // cancel near z = 0; the exact reduction
  //   L_m^{(-j)}(z) = (-z)^j (m-j)!/m! L_{m-j}^{(j)}(z)
  // is stable everywhere.
  const double rounded = std::round(alpha);
  if (alpha < 0.0 && alpha == rounded) {
    const int j = static_cast<int>(-rounded);
    if (j <= m) {
      return std::pow(-z, j) * factorial(m - j) / factorial(m) *
             laguerre_recurrence(m - j, static_cast<double>(j), z);
    }
  }
  return laguerre_recurrence(m, alpha, z);
}

double tricomi_U_poly(int m, double b_param, double z) {
  if (m < 0) throw DomainError("tricomi_U_poly: m < 0");
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  return sign * factorial(m) * laguerre(m, b_param - 1.0, z);
}

std::complex<double> eigenfunction(const EigenfunctionSpec& spec, double r,
                                   double ang) {
  const int n = spec.n, m = spec.m;
  if (n < 0 || m < 0) throw DomainError("eigenfunction: n, m must be >= 0");
  const double rho = spec.rho;
  if (!(rho > 0.0)) throw NegativeNormalization("eigenfunction: rho <= 0");
  if (!(spec.a > 0.0)) throw DomainError("eigenfunction: a <= 0");

  if (r == 0.0 && n != m) return {0.0, 0.0};  // phi ~ r^{|n-m|} at the origin

  const double rho2 = rho * rho;
  const double z = r * r / rho2;
  const double lambda_n =
      1.0 / std::sqrt(M_PI * factorial(n) * std::pow(rho2, n + 1));
  const std::complex<double> exp_coeff(1.0 / (2.0 * rho2),
                                       -spec.rho_dot * rho /
                                           (2.0 * spec.a * rho2));
  const std::complex<double> radial =
      std::pow(r, n - m) * tricomi_U_poly(m, 1.0 - m + n, z);
  const std::complex<double> phase =
      std::exp(std::complex<double>(0.0, (m - n) * ang));
  return lambda_n * unit_i_pow(m) * std::pow(rho, m) /
         std::sqrt(factorial(m)) * radial * phase *
         std::exp(-exp_coeff * (r * r));
}

std::complex<double> eigenfunction(const CaseContext& ctx, int n, int m,
                                   double t, double r, double ang) {
  EigenfunctionSpec spec;
  spec.n = n;
  spec.m = m;
  spec.rho = ctx.ep.rho(t);
  spec.rho_dot = ctx.ep.rho_dot(t);
  spec.a = ctx.ep.a(t);
  return eigenfunction(spec, r, ang);
}

std::complex<double> eigenfunction_family(const CaseContext& ctx, int n, int m,
                                          double t, double r, double ang) {
  // Same wavefunction, computed through each family's reduced analytic
  // variables (rho and rho*rho_dot/a expressed in the family constants).
  const EPFamily& ep = ctx.ep;
  double rho2;
  double rho_rhodot_over_a;
  switch (ep.kind) {
    case EPFamily::Kind::ExponentialSetI: {
      rho2 = ep.mu * ep.mu * std::exp(-ep.vartheta * t);
      // rho rho_dot = -(vt/2) mu^2 e^{-vt t}, a = sigma e^{-vt t}
      rho_rhodot_over_a = -ep.vartheta * ep.mu * ep.mu / (2.0 * ep.sigma);
      break;
    }
    case EPFamily::Kind::RationalSetII: {
      const double s = ep.Gamma * t + ep.chi;
      if (s <= 0.0) throw SingularDenominator("eigenfunction_family: Gamma*t + chi <= 0");
      const double k = ep.k;
      const double c1 = 1.0 + 2.0 / k;
      rho2 = ep.mu * ep.mu * std::pow(c1, 2.0 / k) * std::pow(s, -2.0 / k);
      // exponents cancel: rho rho_dot / a is a time constant of the family
      rho_rhodot_over_a = -ep.Gamma * ep.mu * ep.mu / (k * ep.sigma * c1);
      break;
    }
    default: {  // RationalCritical
      const double s = ep.Gamma * t + ep.chi;
      if (s <= 0.0) throw SingularDenominator("eigenfunction_family: Gamma*t + chi <= 0");
      rho2 = ep.mu * ep.mu * s;
      // rho rho_dot = mu^2 Gamma / 2, a = sigma
      rho_rhodot_over_a = ep.mu * ep.mu * ep.Gamma / (2.0 * ep.sigma);
      break;
    }
  }
  if (r == 0.0 && n != m) return {0.0, 0.0};
  const double z = r * r / rho2;
  const double lambda_n =
      1.0 / std::sqrt(M_PI * factorial(n) * std::pow(rho2, n + 1));
  const std::complex<double> exp_coeff(1.0 / (2.0 * rho2),
                                       -rho_rhodot_over_a / (2.0 * rho2));
  return lambda_n * unit_i_pow(m) * std::pow(rho2, m / 2.0) /
         std::sqrt(factorial(m)) * std::pow(r, n - m) *
         tricomi_U_poly(m, 1.0 - m + n, z) *
         std::exp(std::complex<double>(0.0, (m - n) * ang)) *
         std::exp(-exp_coeff * (r * r));
}

std::complex<double> orthonormality_integral(const EigenfunctionSpec& A,
                                             const EigenfunctionSpec& B,
                                             const OrthoQuadConfig& cfg) {
  if (std::abs(A.rho - B.rho) > 1e-12 * std::max(1.0, std::abs(A.rho))) {
    throw DomainError("orthonormality_integral: specs must share rho (same time)");
  }
  const double rho2 = A.rho * A.rho;

  auto evaluate = [&](int nr, int na) {
    const QuadratureRule rad = gauss_laguerre(nr);
    const QuadratureRule angq = gauss_legendre(na, 0.0, 2.0 * M_PI);
    std::complex<double> acc{0.0, 0.0};
    for (int i = 0; i < nr; ++i) {
      const double s = rad.nodes[i];
      const double r = A.rho * std::sqrt(s);
      std::complex<double> ang_acc{0.0, 0.0};
      for (int j = 0; j < na; ++j) {
        const double ang = angq.nodes[j];
        ang_acc += angq.weights[j] * std::conj(eigenfunction(A, r, ang)) *
                   eigenfunction(B, r, ang);
      }
      // r dr = (rho^2/2) ds; the product phi_A* phi_B carries e^{-s} exactly,
      // which the Laguerre weight absorbs after the e^{+s} reweighting.
      acc += rad.weights[i] * std::exp(s) * ang_acc * (rho2 / 2.0);
    }
    return acc;
  };

  const std::complex<double> coarse = evaluate(cfg.radial_nodes, cfg.angular_nodes);
  const std::complex<double> fine =
      evaluate(2 * cfg.radial_nodes, 2 * cfg.angular_nodes);
  if (std::abs(fine - coarse) > cfg.tol * std::max(1.0, std::abs(fine))) {
    throw QuadratureNotConverged("orthonormality_integral: refinement moved the value by " +
                                 std::to_string(std::abs(fine - coarse)));
  }
  return fine;
}

RatioField invariant_apply_polar(const EigenfunctionSpec& spec, double xi2,
                                 const std::vector<double>& r_samples,
                                 const std::vector<double>& ang_samples,
                                 double h) {
  const double rho = spec.rho;
  const double rho2 = rho * rho;
  const double hr = h * rho;
  const double ha = h;
  auto phi = [&](double r, double ang) { return eigenfunction(spec, r, ang); };

  double max_abs = 0.0;
  for (double r : r_samples)
    for (double ang : ang_samples)
      max_abs = std::max(max_abs, std::abs(phi(r, ang)));

  RatioField field;
  for (double r : r_samples) {
    if (r - hr <= 0.0) throw DomainError("invariant_apply_polar: grid touches r = 0");
    for (double ang : ang_samples) {
      const std::complex<double> p0 = phi(r, ang);
      if (std::abs(p0) < 1e-8 * max_abs) {
        ++field.skipped;
        continue;
      }
      const std::complex<double> pr_p = phi(r + hr, ang);
      const std::complex<double> pr_m = phi(r - hr, ang);
      const std::complex<double> pa_p = phi(r, ang + ha);
      const std::complex<double> pa_m = phi(r, ang - ha);
      const std::complex<double> dr = (pr_p - pr_m) / (2.0 * hr);
      const std::complex<double> drr = (pr_p - 2.0 * p0 + pr_m) / (hr * hr);
      const std::complex<double> daa = (pa_p - 2.0 * p0 + pa_m) / (ha * ha);

      const std::complex<double> Iphi =
          (xi2 * r * r / rho2 +
           (spec.rho_dot / spec.a) * (spec.rho_dot / spec.a) * r * r) *
              p0 -
          rho2 * (drr + dr / r) +
          std::complex<double>(0.0, 2.0 * rho * spec.rho_dot / spec.a) *
              (r * dr + p0) -
          rho2 / (r * r) * daa;
      field.ratio.push_back(Iphi / p0);
    }
  }
  if (field.ratio.empty()) throw DomainError("invariant_apply_polar: all nodes skipped");
  std::complex<double> sum{0.0, 0.0};
  for (const auto& v : field.ratio) sum += v;
  field.mean = sum / static_cast<double>(field.ratio.size());
  for (const auto& v : field.ratio) {
    field.spread = std::max(field.spread, std::abs(v - field.mean));
  }
  field.spread /= std::max(1.0, std::abs(field.mean));
  return field;
}

}  // namespace ncqosc
