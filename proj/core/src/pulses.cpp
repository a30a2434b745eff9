#include "sngqc/pulses.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace sngqc {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::SNGQC:
      return "SNGQC";
    case Scheme::NGQC_A:
      return "NGQC_A";
    case Scheme::NGQC_B:
      return "NGQC_B";
  }
  return "?";
}

Scheme scheme_from_string(const std::string& name) {
  if (name == "SNGQC") return Scheme::SNGQC;
  if (name == "NGQC_A") return Scheme::NGQC_A;
  if (name == "NGQC_B") return Scheme::NGQC_B;
  throw std::invalid_argument("unknown scheme: " + name);
}

void GateParams::validate() const {
  if (!std::isfinite(theta) || !std::isfinite(phi) || !std::isfinite(gamma)) {
    throw std::invalid_argument("gate angles must be finite");
  }
}

double PulseSegment::amplitude(double t_local) const {
  if (duration <= 0) {
    return envelope == Envelope::Constant ? peak_amplitude : 0.0;
  }
  if (envelope == Envelope::Constant) {
    return peak_amplitude;
  }
  const double s = std::sin(kPi * t_local / duration);
  return peak_amplitude * s * s;
}

double PulseSegment::amplitude_derivative(double t_local) const {
  if (envelope == Envelope::Constant || duration <= 0) {
    return 0.0;
  }
  return peak_amplitude * (kPi / duration) * std::sin(2.0 * kPi * t_local / duration);
}

double PulseSegment::area() const {
  return envelope == Envelope::Constant ? peak_amplitude * duration
                                        : peak_amplitude * duration / 2.0;
}

double PulseSchedule::total_duration() const {
  double t = 0.0;
  for (const auto& s : segments) {
    t += s.duration;
  }
  return t;
}

double PulseSchedule::max_peak_amplitude() const {
  double m = 0.0;
  for (const auto& s : segments) {
    m = std::max(m, s.peak_amplitude);
  }
  return m;
}

std::string PulseSchedule::to_table() const {
  std::ostringstream os;
  os << "envelope peak_rad_s detuning_rad_s phase_rad duration_s drag_inv_alpha\n";
  char buf[160];
  for (const auto& s : segments) {
    std::snprintf(buf, sizeof(buf), "%s %.9e %.9e %.9e %.9e %.9e\n",
                  s.envelope == Envelope::SinSquared ? "sin2" : "const", s.peak_amplitude,
                  s.detuning, s.phase_eta, s.duration, s.drag_inv_alpha);
    os << buf;
  }
  return os.str();
}

PulseSchedule parse_schedule_table(const std::string& table) {
  std::istringstream is(table);
  std::string header;
  std::getline(is, header);
  PulseSchedule out;
  std::string kind;
  PulseSegment seg;
  while (is >> kind >> seg.peak_amplitude >> seg.detuning >> seg.phase_eta >> seg.duration >>
         seg.drag_inv_alpha) {
    if (kind != "sin2" && kind != "const") {
      throw std::invalid_argument("bad envelope kind in schedule table: " + kind);
    }
    seg.envelope = kind == "sin2" ? Envelope::SinSquared : Envelope::Constant;
    out.segments.push_back(seg);
  }
  return out;
}

namespace {

PulseSegment rabi_segment(double area, double eta, double omega_max) {
  PulseSegment s;
  s.envelope = Envelope::SinSquared;
  s.phase_eta = eta;
  if (area < 0) {
    area = -area;
    s.phase_eta = eta + kPi;
  }
  s.peak_amplitude = omega_max;
  s.duration = 2.0 * area / omega_max;
  return s;
}

}  // namespace

PulseSchedule sngqc_schedule(const GateParams& gp, double omega_max, double delta) {
  gp.validate();
  if (gp.scheme != Scheme::SNGQC) {
    throw std::invalid_argument("sngqc_schedule requires the SNGQC scheme");
  }
  if (omega_max <= 0 || delta <= 0) {
    throw std::invalid_argument("sngqc_schedule: omega_max and delta must be > 0");
  }
  PulseSchedule sched;
  sched.segments.push_back(rabi_segment(kPi / 2 - gp.theta, gp.phi + kPi / 2, omega_max));

  PulseSegment detune;
  detune.envelope = Envelope::Constant;
  detune.peak_amplitude = 0.0;
  detune.detuning = gp.gamma >= 0 ? delta : -delta;
  detune.phase_eta = gp.phi + gp.gamma - kPi / 2;
  detune.duration = std::abs(gp.gamma) / delta;
  sched.segments.push_back(detune);

  sched.segments.push_back(rabi_segment(kPi / 2, gp.phi + gp.gamma - kPi / 2, omega_max));
  sched.segments.push_back(rabi_segment(gp.theta, gp.phi + kPi / 2, omega_max));
  return sched;
}

PulseSchedule ngqc_schedule(const GateParams& gp, double omega_max) {
  gp.validate();
  if (gp.scheme != Scheme::NGQC_A && gp.scheme != Scheme::NGQC_B) {
    throw std::invalid_argument("ngqc_schedule requires an NGQC scheme");
  }
  if (omega_max <= 0) {
    throw std::invalid_argument("ngqc_schedule: omega_max must be > 0");
  }
  const double mid = gp.scheme == Scheme::NGQC_A ? gp.phi - gp.gamma + kPi / 2
                                                 : gp.phi - gp.gamma - kPi / 2;
  PulseSchedule sched;
  sched.segments.push_back(rabi_segment(gp.theta, gp.phi - kPi / 2, omega_max));
  sched.segments.push_back(rabi_segment(kPi, mid, omega_max));
  sched.segments.push_back(rabi_segment(kPi - gp.theta, gp.phi - kPi / 2, omega_max));
  return sched;
}

PulseSchedule drag_augment(const PulseSchedule& sched, double alpha) {
  if (alpha <= 0) {
    throw std::invalid_argument("drag_augment: alpha must be > 0");
  }
  PulseSchedule out = sched;
  for (auto& s : out.segments) {
    if (s.envelope == Envelope::SinSquared) {
      s.drag_inv_alpha = 1.0 / alpha;
    }
  }
  return out;
}

HamiltonianTrajectory inject_errors(const HamiltonianTrajectory& h, const ErrorModel& em,
                                    double omega_max) {
  const double eps = em.rabi_epsilon;
  const double shift = em.detuning_delta * omega_max;
  const bool shift2 = em.shift_second_level && h.dim() >= 3;
  return h.transformed([eps, shift, shift2](const Matrix& m, double) {
    Matrix out = m;
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
      for (Eigen::Index j = 0; j < out.cols(); ++j) {
        if (i != j) {
          out(i, j) *= 1.0 + eps;
        }
      }
    }
    out(1, 1) += shift;
    if (shift2) {
      out(2, 2) += 2.0 * shift;
    }
    return out;
  });
}

}  // namespace sngqc
