#pragma once

#include <string>

#include "sngqc/device.hpp"
#include "sngqc/pulses.hpp"

namespace sngqc {

struct IdealGate {
  Matrix matrix;
  std::string label;
};

/// Closed-form rotation for the scheme's convention: exp(-i(gamma/2) n.sigma)
/// for the short path, exp(-i gamma n.sigma) for the orange-slice paths,
/// with n = (sin t cos p, sin t sin p, cos t).
IdealGate ideal_single_gate(const GateParams& gp);

/// diag(1, 1, 1, e^{-i gamma_p / 2})
IdealGate ideal_cphase(double gamma_p);

/// Schedule for the gate under the given device (short-path or orange-slice).
PulseSchedule schedule_for(const GateParams& gp, const TransmonParams& tp);

struct CyclicReport {
  double projector_deviation;  // max_m |U |mu_m><mu_m| U^dag - |mu_m><mu_m}|
  double phase_error;          // max_m |<mu_m|U|mu_m> - e^{-+ i gamma/2}|
};

/// Cyclic-evolution check on the ideal two-level model: the dressed states
/// must return to themselves up to the phases e^{-i gamma/2}, e^{+i gamma/2}.
CyclicReport verify_cyclic(const PulseSchedule& sched, const GateParams& gp,
                           double dt = 1e-12);

/// Maximum of |<mu_m| U^dag(t) H(t) U(t) |mu_m>| / max_peak over uniformly
/// sampled times (the dynamical-phase integrand, which vanishes on a
/// parallel-transported path).
double verify_parallel_transport(const PulseSchedule& sched, const GateParams& gp,
                                 int samples, double dt = 1e-12);

/// Re<target|rho|target> clamped to [0,1]; a lower-dimensional target is
/// embedded with zero amplitude on the extra levels.
double state_fidelity(const Matrix& rho, const Vector& target);

struct FidelityReport {
  double state_fidelity = 0.0;  // for averages: the worst grid point
  double gate_fidelity = 0.0;
  double leakage = 0.0;
  double duration = 0.0;  // s
};

struct SimOptions {
  double dt = 5e-12;
  int n_states = 1001;
  bool with_drag = true;
  bool three_level = true;
  ErrorModel errors{};
  double kappa_override = -1.0;  // >= 0 replaces both device rates
  int workers = 0;               // 0 = hardware concurrency
};

/// Lindblad evolution of one initial qubit state |psi0| under the gate's
/// schedule; fidelity against the ideal final state.
FidelityReport simulate_state(const GateParams& gp, const TransmonParams& tp,
                              const Vector& psi0, const SimOptions& opts);

/// Average state fidelity over initial states cos(v)|0> + sin(v)|1> with v
/// uniform on [0, 2pi] (trapezoid over n_states points, endpoints included).
/// The evolutions run over the density-matrix basis units of the qubit
/// subspace; every grid state is then an exact linear combination.
FidelityReport gate_fidelity_single(const GateParams& gp, const TransmonParams& tp,
                                    const SimOptions& opts);

/// Two-qubit average over product states
/// (cos v1 |0> + sin v1 |1>)(cos v2 |0> + sin v2 |1>) on a near-square grid of
/// ~n_states points over [0, 2pi]^2, full dim-9 Lindblad model.
FidelityReport gate_fidelity_two(const TwoQubitPlan& plan, const TransmonParams& tp,
                                 const SimOptions& opts);

}  // namespace sngqc
