#include "ncqosc/canonical.hpp"

#include "ncqosc/errors.hpp"

namespace ncqosc {

double symplectic_pairing(const LinearObservable& u, const LinearObservable& v) {
  // J: [x1,p1] = [x2,p2] = 1, antisymmetric, all else zero.
  return u.coeffs[0] * v.coeffs[2] + u.coeffs[1] * v.coeffs[3] -
         u.coeffs[2] * v.coeffs[0] - u.coeffs[3] * v.coeffs[1];
}

BoppFrame bopp_shift(double theta, double Omega) {
  BoppFrame fr;
  fr.X1 = {{1.0, 0.0, 0.0, -theta / 2.0}};
  fr.X2 = {{0.0, 1.0, theta / 2.0, 0.0}};
  fr.P1 = {{0.0, Omega / 2.0, 1.0, 0.0}};
  fr.P2 = {{-Omega / 2.0, 0.0, 0.0, 1.0}};
  return fr;
}

double QuadraticForm::evaluate(const std::array<double, 4>& z) const {
  double acc = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) acc += Q[i][j] * z[i] * z[j];
  return 0.5 * acc;
}

void QuadraticForm::add_square(const LinearObservable& v, double w) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) Q[i][j] += 2.0 * w * v.coeffs[i] * v.coeffs[j];
}

HamiltonianCoefficients hamiltonian_coefficients(double M, double q, double f,
                                                 double omega, double B,
                                                 double theta, double Omega) {
  if (f <= 0.0) throw NonPositiveDamping("hamiltonian_coefficients: f <= 0");
  const double qB = q * B;
  const double A = q * q * B * B * f / (4.0 * M) + M * omega * omega / f;
  HamiltonianCoefficients h;
  h.a = f / M + qB * f * theta / (2.0 * M) + 0.25 * A * theta * theta;
  h.b = A + qB * f * Omega / (2.0 * M) + f * Omega * Omega / (4.0 * M);
  h.c = 0.5 * (qB * f / M * (1.0 + theta * Omega / 4.0) + Omega * f / M +
               A * theta);
  return h;
}

QuadraticForm expand_nc_hamiltonian(double M, double q, double f, double omega,
                                    double B, double theta, double Omega) {
  if (f <= 0.0) throw NonPositiveDamping("expand_nc_hamiltonian: f <= 0");
  const BoppFrame fr = bopp_shift(theta, Omega);

  auto axpy = [](LinearObservable u, double s, const LinearObservable& v) {
    for (int i = 0; i < 4; ++i) u.coeffs[i] += s * v.coeffs[i];
    return u;
  };
  // Symmetric gauge: A1 = -(B/2) X2, A2 = +(B/2) X1, so
  //   P1 - qA1 = P1 + (qB/2) X2,  P2 - qA2 = P2 - (qB/2) X1.
  const LinearObservable pi1 = axpy(fr.P1, q * B / 2.0, fr.X2);
  const LinearObservable pi2 = axpy(fr.P2, -q * B / 2.0, fr.X1);

  QuadraticForm form;
  const double kin = f / (2.0 * M);
  const double pot = M * omega * omega / (2.0 * f);
  form.add_square(pi1, kin);
  form.add_square(pi2, kin);
  form.add_square(fr.X1, pot);
  form.add_square(fr.X2, pot);
  return form;
}

QuadraticForm coefficient_form(const HamiltonianCoefficients& h) {
  QuadraticForm form;
  form.Q[0][0] = form.Q[1][1] = h.b;
  form.Q[2][2] = form.Q[3][3] = h.a;
  // c (p1 x2 - p2 x1): symmetric off-diagonal entries of c each.
  form.Q[2][1] = form.Q[1][2] = h.c;
  form.Q[3][0] = form.Q[0][3] = -h.c;
  return form;
}

}  // namespace ncqosc
