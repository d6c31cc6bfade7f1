#pragma once

#include <array>

#include "ncqosc/scenario.hpp"

namespace ncqosc {

/// Linear combination over the ordered basis (x1, x2, p1, p2).
/// The commutator of two such observables is i * (u^T J v) with J the
/// canonical symplectic pairing matrix ([x_j, p_k] = i delta_jk).
struct LinearObservable {
  std::array<double, 4> coeffs{0.0, 0.0, 0.0, 0.0};

  static LinearObservable x1() { return {{1, 0, 0, 0}}; }
  static LinearObservable x2() { return {{0, 1, 0, 0}}; }
  static LinearObservable p1() { return {{0, 0, 1, 0}}; }
  static LinearObservable p2() { return {{0, 0, 0, 1}}; }
};

/// u^T J v; the commutator [u, v] equals i times this value.
double symplectic_pairing(const LinearObservable& u, const LinearObservable& v);

struct BoppFrame {
  LinearObservable X1, X2, P1, P2;
};

/// X1 = x1 - (theta/2) p2, X2 = x2 + (theta/2) p1,
/// P1 = p1 + (Omega/2) x2, P2 = p2 - (Omega/2) x1.
BoppFrame bopp_shift(double theta, double Omega);

/// H = 1/2 z^T Q z on z = (x1, x2, p1, p2).
struct QuadraticForm {
  std::array<std::array<double, 4>, 4> Q{};

  double evaluate(const std::array<double, 4>& z) const;

  /// Adds w * (sum_i v_i z_i)^2 to the form (symmetrically).
  void add_square(const LinearObservable& v, double w);
};

struct HamiltonianCoefficients {
  double a, b, c;
};

/// The coefficient route: a, b, c as explicit functions of
/// (M, q, f, omega, B, theta, Omega).
HamiltonianCoefficients hamiltonian_coefficients(double M, double q, double f,
                                                 double omega, double B,
                                                 double theta, double Omega);

/// The expansion route: substitutes the Bopp-shifted observables into
///   H = f/(2M) [(P1 - qA1)^2 + (P2 - qA2)^2] + M omega^2/(2f) (X1^2 + X2^2)
/// with the symmetric-gauge potential A = (B/2)(-X2, X1).
/// Throws NonPositiveDamping if f <= 0.
QuadraticForm expand_nc_hamiltonian(double M, double q, double f, double omega,
                                    double B, double theta, double Omega);

/// The quadratic form corresponding to
///   H = a/2 (p1^2 + p2^2) + b/2 (x1^2 + x2^2) + c (p1 x2 - p2 x1).
QuadraticForm coefficient_form(const HamiltonianCoefficients& h);

}  // namespace ncqosc
