#pragma once

#include <complex>

#include <Eigen/Dense>

namespace sngqc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr Complex kImag{0.0, 1.0};

/// Kronecker product, dim(a)*dim(b).
Matrix kron(const Matrix& a, const Matrix& b);

/// Matrix exponential exp(a) by scaling-and-squaring (any small square matrix).
Matrix expm(const Matrix& a);

/// exp(-i*h*dt) through the eigendecomposition of a Hermitian h.
/// Exact up to the eigensolver for the piecewise-constant propagator steps.
Matrix hermitian_propagator(const Matrix& h, double dt);

/// max_ij |a_ij - conj(a_ji)|
double hermiticity_error(const Matrix& a);

/// max_ij |(u^dag u - 1)_ij|
double unitarity_error(const Matrix& u);

double max_abs_diff(const Matrix& a, const Matrix& b);

/// Compensated (Kahan) accumulator so reductions are order-stable at 1e-12.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - c_;
    const double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

}  // namespace sngqc
