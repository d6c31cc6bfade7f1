#pragma once

#include <functional>
#include <vector>

namespace ncqosc {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Laguerre rule for \int_0^inf e^{-x} g(x) dx (Golub-Welsch).
QuadratureRule gauss_laguerre(int n);

/// Gauss-Legendre rule on [a, b].
QuadratureRule gauss_legendre(int n, double a, double b);

/// Adaptive Gauss-Kronrod integral of f on [a, b]; `tol` is the relative
/// termination target, `error` (optional) receives the error estimate.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol = 1e-12,
                          double* error = nullptr);

/// Bisection root of f on [lo, hi] (f must change sign); |hi-lo| refined to
/// rel_tol * max(1, |root|).
double bisect_root(const std::function<double(double)>& f, double lo,
                   double hi, double rel_tol = 1e-13);

}  // namespace ncqosc
