#include "sngqc/states.hpp"

#include <cmath>

namespace sngqc {

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, -kImag, kImag, 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix identity(int dim) { return Matrix::Identity(dim, dim); }

Vector basis_ket(int dim, int idx) {
  Vector v = Vector::Zero(dim);
  v(idx) = 1.0;
  return v;
}

Matrix projector(const Vector& v) { return v * v.adjoint(); }

std::pair<Vector, Vector> dressed_states(double theta, double phi) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  Vector plus(2), minus(2);
  plus << c, s * std::exp(kImag * phi);
  minus << s * std::exp(-kImag * phi), -c;
  return {plus, minus};
}

DensityDiagnostics density_diagnostics(const Matrix& rho) {
  DensityDiagnostics d{};
  d.hermiticity_error = hermiticity_error(rho);
  d.trace_error = std::abs(rho.trace() - Complex{1.0, 0.0});
  Eigen::SelfAdjointEigenSolver<Matrix> es((rho + rho.adjoint()) / 2.0);
  d.min_eigenvalue = es.eigenvalues().minCoeff();
  return d;
}

}  // namespace sngqc
