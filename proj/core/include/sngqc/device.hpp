#pragma once

#include <functional>
#include <vector>

#include "sngqc/dynamics.hpp"
#include "sngqc/pulses.hpp"

namespace sngqc {

/// Single-transmon constants, all angular frequencies in rad/s.
struct TransmonParams {
  double omega_max = 0.0;  // peak drive amplitude
  double delta = 0.0;      // detuning used by the short-path middle segment
  double alpha = 0.0;      // anharmonicity, > 0
  double kappa1 = 0.0;     // decay rate
  double kappa2 = 0.0;     // dephasing rate

  void validate() const;
};

/// Capacitively coupled transmon pair with parametric frequency modulation of
/// the second qubit. nu = zeta - alpha_b + deltap is enforced at construction.
struct CoupledParams {
  double zeta = 0.0;     // qubit frequency difference
  double alpha_a = 0.0;  // anharmonicity of qubit A
  double alpha_b = 0.0;  // anharmonicity of qubit B
  double g = 0.0;        // static coupling
  double nu = 0.0;       // modulation frequency (derived)
  double beta = 0.0;     // modulation index epsilon/nu
  double varphi = 0.0;   // modulation phase offset
  double deltap = 0.0;   // effective two-level detuning

  static CoupledParams make(double zeta, double alpha_a, double alpha_b, double g, double beta,
                            double varphi, double deltap);
};

/// Drive Hamiltonian for one transmon under a pulse schedule.
/// dim 2: H = [[D/2, c],[conj(c), -D/2]] with c = (Omega + i*Omega_d)/2 e^{-i eta}.
/// dim 3 (with_leakage): adds the |2> level at -alpha - D/2 and the 1<->2
/// drive sqrt(2)*c, plus, for DRAG-augmented segments, the derivative
/// quadrature Omega_d = -dOmega/dt / alpha and the Omega^2/(2 alpha) shift of
/// |1> that cancels the drive-induced level repulsion from |2>.
HamiltonianTrajectory single_qubit_trajectory(const PulseSchedule& sched,
                                              const TransmonParams& tp, bool with_leakage);

/// (Lambda1 = |0><1| + sqrt2 |1><2|, kappa1) and (Lambda2 = |1><1| + 2|2><2|, kappa2).
std::vector<CollapseChannel> collapse_channels(const TransmonParams& tp);
/// Qubit-subspace truncations of the same channels.
std::vector<CollapseChannel> collapse_channels_two_level(const TransmonParams& tp);

/// First-kind Bessel J1 by power series; 1e-12 for |x| <= 3.
double bessel_j1(double x);

/// g' = 2 sqrt(2) g J1(beta)
double effective_coupling(double g, double beta);

/// 2x2 effective Hamiltonian in the {|11>, |02>} subspace:
/// (1/2) [[deltap, g' e^{i(varphi+pi/2)}], [g' e^{-i(varphi+pi/2)}, -deltap]].
Matrix effective_two_qubit_hamiltonian(const CoupledParams& cp);

/// Interaction-picture two-qutrit Hamiltonian with the three coupling terms
///   g |01><10| e^{i zeta t} + sqrt2 g |11><20| e^{i (zeta+alpha_a) t}
///   + sqrt2 g |02><11| e^{i (zeta-alpha_b) t},
/// each multiplied by exp(-i beta(t) cos(nu t + varphi)), plus H.c.
/// Basis |jk> at index 3j+k.
HamiltonianTrajectory coupled_trajectory(const CoupledParams& cp,
                                         std::function<double(double)> beta_of_t,
                                         double duration);

/// Composite control-phase plan acting in the {|11>, |02>} subspace.
///
/// Short-path scheme: two constant-beta coupling segments of pulse area pi/2
/// at deltap = 0 around a drive-off segment of duration gamma_p/deltap whose
/// detuning enters as the symmetric splitting deltap*(|11><11| - |02><02|)/2
/// (the representation of the detuned-drive frame in which the effective
/// two-level model is written). Orange-slice scheme: two resonant coupling
/// segments of area pi each.
struct TwoQubitPlan {
  Scheme scheme = Scheme::SNGQC;
  double gamma_p = 0.0;
  CoupledParams cp;
  /// Segment plan in effective-coupling units (peaks are g', constant
  /// envelopes); reusable as the ideal two-level model of the gate.
  PulseSchedule effective;
  /// Per-segment modulation phase offsets realizing the effective phases.
  std::vector<double> mod_phases;

  double duration() const { return effective.total_duration(); }
};

TwoQubitPlan two_qubit_plan(Scheme scheme, double gamma_p, const CoupledParams& cp);

/// Full dim-9 trajectory for a composite plan.
HamiltonianTrajectory two_qubit_trajectory(const TwoQubitPlan& plan);

/// Single-transmon channels tensored with the identity on the partner:
/// (L1 x I, I x L1) at kappa1 and (L2 x I, I x L2) at kappa2.
std::vector<CollapseChannel> coupled_collapse_channels(const TransmonParams& tp);

/// Two-qutrit computational indices {|00>,|01>,|10>,|11>} = {0, 1, 3, 4}.
const std::vector<int>& computational_indices();

}  // namespace sngqc
