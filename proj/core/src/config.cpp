#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "sngqc/experiment.hpp"

namespace sngqc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

struct RawEntry {
  std::string value;
  int line;
  bool used = false;
};

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) {
    return "";
  }
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

class RawConfig {
 public:
  explicit RawConfig(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
      throw ConfigError("cannot open config file: " + path);
    }
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) {
        line = line.substr(0, hash);
      }
      line = trim(line);
      if (line.empty()) {
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        fail("missing '='", lineno);
      }
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (key.empty() || value.empty()) {
        fail("empty key or value", lineno);
      }
      if (entries_.count(key)) {
        fail("duplicate key '" + key + "'", lineno);
      }
      entries_[key] = RawEntry{value, lineno};
    }
  }

  bool has(const std::string& key) const { return entries_.count(key) > 0; }

  double number(const std::string& key) {
    RawEntry& e = fetch(key);
    try {
      std::size_t pos = 0;
      const double v = std::stod(e.value, &pos);
      if (pos != e.value.size() || !std::isfinite(v)) {
        throw std::invalid_argument("");
      }
      return v;
    } catch (...) {
      fail("malformed number for key '" + key + "'", e.line);
    }
    return 0;
  }

  std::string text(const std::string& key) { return fetch(key).value; }

  bool flag(const std::string& key) {
    RawEntry& e = fetch(key);
    if (e.value == "on" || e.value == "true") {
      return true;
    }
    if (e.value == "off" || e.value == "false") {
      return false;
    }
    fail("expected on/off for key '" + key + "'", e.line);
    return false;
  }

  int line_of(const std::string& key) const { return entries_.at(key).line; }

  void reject_unknown() const {
    std::ostringstream os;
    bool any = false;
    for (const auto& [key, e] : entries_) {
      if (!e.used) {
        if (any) {
          os << "; ";
        }
        os << "unknown key '" << key << "' (line " << e.line << ")";
        any = true;
      }
    }
    if (any) {
      throw ConfigError(os.str());
    }
  }

  void require_all(const std::vector<std::string>& keys) const {
    std::ostringstream os;
    bool any = false;
    for (const auto& k : keys) {
      if (!entries_.count(k)) {
        if (any) {
          os << "; ";
        }
        os << "missing required key '" << k << "'";
        any = true;
      }
    }
    if (any) {
      throw ConfigError(os.str());
    }
  }

 private:
  RawEntry& fetch(const std::string& key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      throw ConfigError("missing required key '" + key + "'");
    }
    it->second.used = true;
    return it->second;
  }

  [[noreturn]] static void fail(const std::string& what, int line) {
    throw ConfigError(what + " (line " + std::to_string(line) + ")");
  }

  std::map<std::string, RawEntry> entries_;
};

double mhz(RawConfig& raw, const std::string& key) { return kTwoPi * 1e6 * raw.number(key); }
double khz(RawConfig& raw, const std::string& key) { return kTwoPi * 1e3 * raw.number(key); }
double angle_pi(RawConfig& raw, const std::string& key) { return kPi * raw.number(key); }

}  // namespace

std::string to_string(SweepKind k) {
  switch (k) {
    case SweepKind::None:
      return "none";
    case SweepKind::Kappa:
      return "kappa";
    case SweepKind::RabiEps:
      return "rabi_eps";
    case SweepKind::DetuningDelta:
      return "detuning_delta";
  }
  return "?";
}

int ExperimentConfig::resolved_n_states() const {
  if (n_states > 0) {
    return n_states;
  }
  return mode == RunMode::SingleQubit ? 1001 : 10001;
}

ExperimentConfig parse_config(const std::string& path, RunMode mode) {
  RawConfig raw(path);
  ExperimentConfig cfg;
  cfg.mode = mode;

  std::vector<std::string> required = {"scheme", "gamma_pi", "kappa1_khz", "kappa2_khz"};
  if (mode == RunMode::SingleQubit) {
    required.insert(required.end(), {"omega_max_mhz", "delta_mhz", "alpha_mhz", "theta_pi",
                                     "phi_pi"});
  } else {
    required.insert(required.end(),
                    {"zeta_mhz", "alpha_a_mhz", "alpha_b_mhz", "g_mhz", "beta", "deltap_mhz"});
  }
  raw.require_all(required);

  cfg.gate.scheme = [&] {
    const std::string name = raw.text("scheme");
    try {
      return scheme_from_string(name);
    } catch (const std::exception&) {
      throw ConfigError("unknown value '" + name + "' for key 'scheme' (line " +
                        std::to_string(raw.line_of("scheme")) + ")");
    }
  }();
  cfg.gate.gamma = angle_pi(raw, "gamma_pi");
  cfg.transmon.kappa1 = khz(raw, "kappa1_khz");
  cfg.transmon.kappa2 = khz(raw, "kappa2_khz");

  if (mode == RunMode::SingleQubit) {
    cfg.transmon.omega_max = mhz(raw, "omega_max_mhz");
    cfg.transmon.delta = mhz(raw, "delta_mhz");
    cfg.transmon.alpha = mhz(raw, "alpha_mhz");
    cfg.gate.theta = angle_pi(raw, "theta_pi");
    cfg.gate.phi = angle_pi(raw, "phi_pi");
  } else {
    cfg.transmon.alpha = raw.has("alpha_mhz") ? mhz(raw, "alpha_mhz") : kTwoPi * 220e6;
    const double zeta = mhz(raw, "zeta_mhz");
    cfg.coupled = CoupledParams::make(
        zeta, mhz(raw, "alpha_a_mhz"), mhz(raw, "alpha_b_mhz"), mhz(raw, "g_mhz"),
        raw.number("beta"), raw.has("varphi_pi") ? angle_pi(raw, "varphi_pi") : 0.0,
        mhz(raw, "deltap_mhz"));
    cfg.comparator_zeta = raw.has("comparator_zeta_mhz") ? mhz(raw, "comparator_zeta_mhz") : zeta;
  }

  if (raw.has("sweep")) {
    const std::string s = raw.text("sweep");
    if (s == "none") {
      cfg.sweep = SweepKind::None;
    } else if (s == "kappa") {
      cfg.sweep = SweepKind::Kappa;
    } else if (s == "rabi_eps") {
      cfg.sweep = SweepKind::RabiEps;
    } else if (s == "detuning_delta") {
      cfg.sweep = SweepKind::DetuningDelta;
    } else {
      throw ConfigError("unknown value '" + s + "' for key 'sweep' (line " +
                        std::to_string(raw.line_of("sweep")) + ")");
    }
  }
  if (cfg.sweep != SweepKind::None) {
    raw.require_all({"sweep_lo", "sweep_hi", "sweep_n"});
    const bool is_kappa = cfg.sweep == SweepKind::Kappa;
    cfg.sweep_lo = is_kappa ? khz(raw, "sweep_lo") : raw.number("sweep_lo");
    cfg.sweep_hi = is_kappa ? khz(raw, "sweep_hi") : raw.number("sweep_hi");
    cfg.sweep_n = static_cast<int>(raw.number("sweep_n"));
    if (cfg.sweep_n < 2) {
      throw ConfigError("sweep_n must be >= 2 (line " + std::to_string(raw.line_of("sweep_n")) +
                        ")");
    }
    if (!std::isfinite(cfg.sweep_lo) || !std::isfinite(cfg.sweep_hi) ||
        cfg.sweep_hi < cfg.sweep_lo) {
      throw ConfigError("sweep bounds must be finite with sweep_hi >= sweep_lo");
    }
  }

  if (raw.has("dt_ps")) {
    cfg.dt = 1e-12 * raw.number("dt_ps");
    if (cfg.dt <= 0) {
      throw ConfigError("dt_ps must be > 0 (line " + std::to_string(raw.line_of("dt_ps")) + ")");
    }
  }
  if (raw.has("n_states")) {
    cfg.n_states = static_cast<int>(raw.number("n_states"));
    if (cfg.n_states < 2) {
      throw ConfigError("n_states must be >= 2 (line " + std::to_string(raw.line_of("n_states")) +
                        ")");
    }
  }
  if (raw.has("init_theta_pi")) {
    cfg.init_theta = angle_pi(raw, "init_theta_pi");
  }
  if (raw.has("drag")) {
    cfg.drag = raw.flag("drag");
  }
  if (raw.has("output_path")) {
    cfg.output_path = raw.text("output_path");
  }

  raw.reject_unknown();
  cfg.gate.validate();
  return cfg;
}

}  // namespace sngqc
