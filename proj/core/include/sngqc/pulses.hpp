#pragma once

#include <string>
#include <vector>

#include "sngqc/dynamics.hpp"
#include "sngqc/linalg.hpp"

namespace sngqc {

enum class Scheme { SNGQC, NGQC_A, NGQC_B };

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& name);  // throws on unknown name

/// Geometric gate triple. For SNGQC the realized rotation angle is gamma,
/// for the orange-slice paths it is 2*gamma.
struct GateParams {
  double theta = 0.0;  // rad, [0, pi]
  double phi = 0.0;    // rad
  double gamma = 0.0;  // rad
  Scheme scheme = Scheme::SNGQC;

  void validate() const;  // finite angles
};

enum class Envelope { SinSquared, Constant };

struct PulseSegment {
  Envelope envelope = Envelope::SinSquared;
  double peak_amplitude = 0.0;  // rad/s, >= 0
  double detuning = 0.0;        // rad/s, constant over the segment
  double phase_eta = 0.0;       // rad
  double duration = 0.0;        // s, 0 marks a degenerate segment
  double drag_inv_alpha = 0.0;  // s/rad; 0 = no derivative quadrature

  double amplitude(double t_local) const;
  double amplitude_derivative(double t_local) const;
  /// Analytic pulse area: peak*duration/2 for sin^2, peak*duration for constant.
  double area() const;
};

struct PulseSchedule {
  std::vector<PulseSegment> segments;

  double total_duration() const;
  double max_peak_amplitude() const;
  /// One row per segment: envelope, peak, detuning, phase, duration.
  std::string to_table() const;
};

PulseSchedule parse_schedule_table(const std::string& table);

/// Four-segment short-path schedule:
///   1) sin^2 Rabi area pi/2-theta at zero detuning, eta = phi+pi/2
///   2) drive off, constant detuning for gamma/delta, eta = phi+gamma-pi/2
///   3) sin^2 Rabi area pi/2, eta = phi+gamma-pi/2
///   4) sin^2 Rabi area theta, eta = phi+pi/2
/// theta > pi/2 realizes the negative first area as |area| with eta shifted
/// by pi; gamma < 0 flips the detuning sign and uses |gamma|.
PulseSchedule sngqc_schedule(const GateParams& gp, double omega_max, double delta);

/// Three-segment resonant orange-slice schedule, areas (theta, pi, pi-theta),
/// outer phases phi-pi/2, middle phase phi-gamma+pi/2 (path A) or
/// phi-gamma-pi/2 (path B). Ideal operator exp(-i gamma n.sigma).
PulseSchedule ngqc_schedule(const GateParams& gp, double omega_max);

/// Adds the first-order derivative correction to every sin^2 segment
/// (quadrature -d(Omega)/dt / alpha); constant-envelope segments unchanged.
PulseSchedule drag_augment(const PulseSchedule& sched, double alpha);

struct ErrorModel {
  double rabi_epsilon = 0.0;    // fractional drive amplitude error
  double detuning_delta = 0.0;  // fractional, in units of omega_max
  /// Also shift level |2> by 2*delta*omega_max in three-level models.
  bool shift_second_level = true;
};

/// Rabi (off-diagonal) terms scaled by (1+eps); adds delta*omega_max |1><1|
/// and, when enabled and dim >= 3, 2*delta*omega_max |2><2|.
HamiltonianTrajectory inject_errors(const HamiltonianTrajectory& h, const ErrorModel& em,
                                    double omega_max);

}  // namespace sngqc
