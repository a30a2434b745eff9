#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sngqc/gates.hpp"

namespace sngqc {

enum class RunMode { SingleQubit, TwoQubit };
enum class SweepKind { None, Kappa, RabiEps, DetuningDelta };

std::string to_string(SweepKind k);

/// Parse failure with the offending key and 1-based line number when known.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flat key-value experiment description. Frequencies are stored in rad/s
/// (file keys carry the 2pi x MHz / 2pi x kHz convention), angles in rad
/// (file keys are multiples of pi), times in seconds.
struct ExperimentConfig {
  RunMode mode = RunMode::SingleQubit;
  TransmonParams transmon;
  CoupledParams coupled;
  double comparator_zeta = 0.0;  // orange-slice two-qubit comparator operating point
  GateParams gate;
  SweepKind sweep = SweepKind::None;
  double sweep_lo = 0.0;  // rad/s for kappa sweeps, fraction otherwise
  double sweep_hi = 0.0;
  int sweep_n = 0;
  double dt = 5e-12;
  int n_states = 0;  // 0 = mode default (1001 single-qubit, 10001 two-qubit)
  double init_theta = 0.0;
  bool drag = true;
  std::string output_path = "-";  // "-" = stdout; the CLI --out flag overrides

  int resolved_n_states() const;
};

ExperimentConfig parse_config(const std::string& path, RunMode mode);

struct SweepRow {
  double sweep_value = 0.0;  // kHz for kappa sweeps, fraction otherwise
  double fidelity = 0.0;
  double leakage = 0.0;
  double duration = 0.0;  // s
  std::string scheme;
};

struct SweepResult {
  std::vector<std::string> metadata;  // emitted as "# ..." lines
  std::vector<SweepRow> rows;         // grouped by scheme, ascending sweep_value
};

/// Population and fidelity time series (Fig.-2/5b style), one row per <=0.5 ns.
/// Columns: t_ns,P0,P1,P2,F for a single qubit; t_ns,P11,P02,F for the pair.
void run_state_dynamics(const ExperimentConfig& cfg, std::ostream& out);

/// Gate fidelity against a uniform decoherence rate grid for the configured
/// gate, short-path scheme plus the orange-slice comparator (same peak drive,
/// half rotation angle).
SweepResult run_decoherence_sweep(const ExperimentConfig& cfg, int workers);

/// Gate fidelity against a Rabi- or detuning-error grid for the short path
/// and both orange-slice paths.
SweepResult run_error_sweep(const ExperimentConfig& cfg, int workers);

void write_sweep_csv(const SweepResult& result, std::ostream& out);
SweepResult read_sweep_csv(std::istream& in);

}  // namespace sngqc
