#pragma once

#include <utility>

#include "sngqc/linalg.hpp"

namespace sngqc {

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix identity(int dim);

/// |idx> in a dim-dimensional space.
Vector basis_ket(int dim, int idx);

/// |v><v|
Matrix projector(const Vector& v);

/// Dressed eigenstates (|mu+>, |mu->) of n.sigma for the axis
/// n = (sin t cos p, sin t sin p, cos t):
///   |mu+> = cos(t/2)|0> + sin(t/2) e^{ip} |1>
///   |mu-> = sin(t/2) e^{-ip} |0> - cos(t/2)|1>
/// The sign of the |1> component of |mu-> is part of the contract; downstream
/// phase bookkeeping depends on it.
std::pair<Vector, Vector> dressed_states(double theta, double phi);

struct DensityDiagnostics {
  double hermiticity_error;  // max |rho - rho^dag|
  double trace_error;        // |tr rho - 1|
  double min_eigenvalue;     // of (rho + rho^dag)/2
};

DensityDiagnostics density_diagnostics(const Matrix& rho);

}  // namespace sngqc
