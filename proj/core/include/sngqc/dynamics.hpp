#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "sngqc/linalg.hpp"

namespace sngqc {

struct CollapseChannel {
  Matrix op;
  double rate = 0.0;  // rad/s, >= 0

  CollapseChannel(Matrix o, double r);
};

/// Piecewise time-dependent Hamiltonian H(t) on [0, total_duration], rad/s.
///
/// Pieces carry their own evaluator on piece-local time so the integrators
/// never sample across a parameter discontinuity: every step lies inside one
/// piece and segment boundaries snap to the step grid.
class HamiltonianTrajectory {
 public:
  struct Piece {
    double start = 0.0;
    double duration = 0.0;
    std::function<Matrix(double)> eval;  // piece-local time in [0, duration]
  };

  HamiltonianTrajectory(int dim, std::vector<Piece> pieces);

  int dim() const { return dim_; }
  double total_duration() const { return total_; }
  const std::vector<Piece>& pieces() const { return pieces_; }

  /// Evaluate at global time t; boundary times resolve to the later piece
  /// (half-open pieces, last one closed).
  Matrix operator()(double t) const;

  /// New trajectory with every sample mapped through f(H, t_global).
  HamiltonianTrajectory transformed(std::function<Matrix(const Matrix&, double)> f) const;

  std::vector<double> breakpoints() const;

 private:
  int dim_;
  std::vector<Piece> pieces_;
  double total_;
};

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IntegratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Time-ordered product of midpoint-sampled short-step exponentials over
/// [t0, t1]. Steps never straddle piece boundaries.
Matrix propagate_unitary(const HamiltonianTrajectory& h, double t0, double t1, double dt);

/// Same stepping, invoking observer(t, U(t)) after every step (and once at t0).
Matrix propagate_unitary_observed(const HamiltonianTrajectory& h, double t0, double t1,
                                  double dt,
                                  const std::function<void(double, const Matrix&)>& observer);

/// Fixed-step RK4 integration of
///   drho/dt = i[rho, H(t)] + sum_k rate_k (L rho L^dag - {L^dag L, rho}/2)
/// over [0, total_duration]. Trace drift beyond 1e-6 of the initial trace
/// raises IntegratorError. The optional observer sees (t, rho) after every
/// step (and the initial state).
Matrix lindblad_evolve(const Matrix& rho0, const HamiltonianTrajectory& h,
                       const std::vector<CollapseChannel>& channels, double dt,
                       const std::function<void(double, const Matrix&)>& observer = {});

/// Tr(rho * op)
Complex expectation(const Matrix& rho, const Matrix& op);

}  // namespace sngqc
