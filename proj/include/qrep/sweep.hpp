#pragma once

// Parameter sweeps producing the figure data as CSV.
//
// Configuration is a key/value text file ("key = value", '#' starts a
// comment). Keys:
//   quantity            reflection_magnitudes | phase_shifts | gate_fidelities |
//                       gate_efficiencies | distribution_fidelities |
//                       distribution_efficiencies
//   axis                delta_p (photon-cavity detuning / kappa) | g_over_kappa
//   range               start:stop:steps
//   params              experimental | fiber_cavity   (base rates, default experimental)
//   g_over_kappa, gamma_over_kappa, delta_over_kappa  (cavity-dipole detuning)
//   delta_p_over_kappa | delta_p_over_gamma           (held detuning for g sweeps)
//   series              key:v1,v2,...   (repeat the sweep for each value of key)

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qrep/cavity_io.hpp"

namespace qrep {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Quantity {
  reflection_magnitudes,
  phase_shifts,
  gate_fidelities,
  gate_efficiencies,
  distribution_fidelities,
  distribution_efficiencies,
};

enum class Axis { delta_p, g_over_kappa };

struct SweepRange {
  double start = 0.0;
  double stop = 1.0;
  int steps = 2;
};

struct Series {
  std::string key;
  std::vector<double> values;
};

struct SweepSpec {
  Quantity quantity = Quantity::reflection_magnitudes;
  CavityParamsd params;  // kappa = 1
  Axis axis = Axis::delta_p;
  SweepRange range;
  // Held-constant ratios not stored in params (delta_p_over_kappa or
  // delta_p_over_gamma).
  std::map<std::string, double> fixed;
  std::optional<Series> series;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

Quantity parse_quantity(std::string_view s);
Axis parse_axis(std::string_view s);
SweepRange parse_range(std::string_view s);
std::string_view to_string(Quantity q);
std::string_view to_string(Axis a);

// Named base parameter sets (kappa = 1).
CavityParamsd named_params(std::string_view name);

// Ordered key/value pairs; later keys override earlier ones.
using ConfigMap = std::map<std::string, std::string>;

ConfigMap parse_config(std::string_view text);
ConfigMap load_config_file(const std::string& path);
// Applies "key=value".
void apply_override(ConfigMap& config, std::string_view assignment);

SweepSpec spec_from_config(const ConfigMap& config);
void validate(const SweepSpec& spec);

std::vector<double> grid(const SweepRange& range);
std::vector<std::string> quantity_columns(Quantity q);

Table run_sweep(const SweepSpec& spec);
void write_csv(std::ostream& os, const Table& table);
std::string format_number(double x);

}  // namespace qrep
