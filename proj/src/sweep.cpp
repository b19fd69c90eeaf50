#include "qrep/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "qrep/gates.hpp"
#include "qrep/protocol.hpp"

namespace qrep {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double parse_double(std::string_view s, std::string_view what) {
  const std::string t = trim(s);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw ConfigError("bad number for " + std::string(what) + ": '" + t + "'");
  }
  if (used != t.size() || !std::isfinite(v)) {
    throw ConfigError("bad number for " + std::string(what) + ": '" + t + "'");
  }
  return v;
}

const std::vector<std::string>& param_keys() {
  static const std::vector<std::string> keys{"g_over_kappa", "gamma_over_kappa",
                                             "delta_over_kappa", "delta_p_over_kappa",
                                             "delta_p_over_gamma"};
  return keys;
}

bool is_param_key(std::string_view k) {
  for (const auto& p : param_keys()) {
    if (p == k) return true;
  }
  return false;
}

// Rates and detuning for one grid point.
struct Point {
  CavityParamsd params;
  double delta_p = 0.0;
};

void set_param(Point& pt, std::map<std::string, double>& held, const std::string& key,
               double value) {
  if (key == "g_over_kappa") {
    pt.params.g = value;
  } else if (key == "gamma_over_kappa") {
    pt.params.gamma = value;
  } else if (key == "delta_over_kappa") {
    pt.params.delta_cd = value;
  } else if (key == "delta_p_over_kappa" || key == "delta_p_over_gamma") {
    held.erase("delta_p_over_kappa");
    held.erase("delta_p_over_gamma");
    held[key] = value;
  } else {
    throw ConfigError("unknown parameter: " + key);
  }
}

std::vector<double> evaluate(Quantity q, const Point& pt) {
  const auto c = reflection(pt.params, pt.delta_p);
  switch (q) {
    case Quantity::reflection_magnitudes:
      return {std::abs(c.r), std::abs(c.n), std::abs(c.r0), std::norm(c.r) + std::norm(c.n)};
    case Quantity::phase_shifts: {
      constexpr double pi = std::numbers::pi;
      return {c.theta0 / pi, c.theta / pi, c.dtheta / pi};
    }
    case Quantity::gate_fidelities: {
      const auto m = gate_metrics(c);
      return {m.f_cpf, m.f_pcg};
    }
    case Quantity::gate_efficiencies: {
      const auto m = gate_metrics(c);
      return {m.eta_cpf, m.eta_pcg};
    }
    case Quantity::distribution_fidelities: {
      const auto d = distribution_metrics(c);
      return {d.f_mh, d.f_mv, gate_metrics(c).f_pcg};
    }
    case Quantity::distribution_efficiencies: {
      const auto d = distribution_metrics(c);
      return {d.eta_m, swap_efficiency(c, SwapVariant::one_pcg),
              swap_efficiency(c, SwapVariant::two_pcg)};
    }
  }
  return {};
}

}  // namespace

Quantity parse_quantity(std::string_view s) {
  for (auto q : {Quantity::reflection_magnitudes, Quantity::phase_shifts,
                 Quantity::gate_fidelities, Quantity::gate_efficiencies,
                 Quantity::distribution_fidelities, Quantity::distribution_efficiencies}) {
    if (to_string(q) == s) return q;
  }
  throw ConfigError("unknown quantity: " + std::string(s));
}

Axis parse_axis(std::string_view s) {
  if (s == "delta_p") return Axis::delta_p;
  if (s == "g_over_kappa") return Axis::g_over_kappa;
  throw ConfigError("unknown axis: " + std::string(s));
}

SweepRange parse_range(std::string_view s) {
  const auto c1 = s.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : s.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw ConfigError("range must be start:stop:steps");
  SweepRange r;
  r.start = parse_double(s.substr(0, c1), "range start");
  r.stop = parse_double(s.substr(c1 + 1, c2 - c1 - 1), "range stop");
  const double steps = parse_double(s.substr(c2 + 1), "range steps");
  if (steps != std::floor(steps) || steps > 1e7) throw ConfigError("range steps must be an integer");
  r.steps = static_cast<int>(steps);
  return r;
}

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::reflection_magnitudes: return "reflection_magnitudes";
    case Quantity::phase_shifts: return "phase_shifts";
    case Quantity::gate_fidelities: return "gate_fidelities";
    case Quantity::gate_efficiencies: return "gate_efficiencies";
    case Quantity::distribution_fidelities: return "distribution_fidelities";
    case Quantity::distribution_efficiencies: return "distribution_efficiencies";
  }
  return "?";
}

std::string_view to_string(Axis a) { return a == Axis::delta_p ? "delta_p" : "g_over_kappa"; }

CavityParamsd named_params(std::string_view name) {
  // (g, kappa, gamma) = 2 pi x (215, 53, 3) MHz.
  if (name == "experimental") return {215.0 / 53.0, 1.0, 3.0 / 53.0, 0.0};
  // Fiber Fabry-Perot cavity, g/kappa = 9.79 with kappa ~ 95 gamma.
  if (name == "fiber_cavity") return {9.79, 1.0, 1.0 / 95.0, 0.0};
  throw ConfigError("unknown parameter set: " + std::string(name));
}

ConfigMap parse_config(std::string_view text) {
  ConfigMap out;
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(t).substr(0, eq));
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    out[key] = trim(std::string_view(t).substr(eq + 1));
  }
  return out;
}

ConfigMap load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

void apply_override(ConfigMap& config, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) throw ConfigError("expected key=value, got '" +
                                                      std::string(assignment) + "'");
  const std::string key = trim(assignment.substr(0, eq));
  if (key.empty()) throw ConfigError("empty key in '" + std::string(assignment) + "'");
  config[key] = trim(assignment.substr(eq + 1));
}

SweepSpec spec_from_config(const ConfigMap& config) {
  static const std::vector<std::string> structural{"quantity", "axis", "range", "params",
                                                   "series"};
  for (const auto& [k, v] : config) {
    bool known = is_param_key(k);
    for (const auto& s : structural) known = known || s == k;
    if (!known) throw ConfigError("unknown config key: " + k);
  }
  auto require = [&](const char* key) -> const std::string& {
    const auto it = config.find(key);
    if (it == config.end()) throw ConfigError(std::string("missing config key: ") + key);
    return it->second;
  };

  SweepSpec spec;
  spec.quantity = parse_quantity(require("quantity"));
  spec.axis = parse_axis(require("axis"));
  spec.range = parse_range(require("range"));

  const auto base = config.find("params");
  spec.params = named_params(base == config.end() ? "experimental" : base->second);

  if (config.count("delta_p_over_kappa") && config.count("delta_p_over_gamma")) {
    throw ConfigError("set only one of delta_p_over_kappa and delta_p_over_gamma");
  }
  Point pt{spec.params, 0.0};
  for (const auto& k : param_keys()) {
    if (const auto it = config.find(k); it != config.end()) {
      set_param(pt, spec.fixed, k, parse_double(it->second, k));
    }
  }
  spec.params = pt.params;

  if (const auto it = config.find("series"); it != config.end()) {
    const auto colon = it->second.find(':');
    if (colon == std::string::npos) throw ConfigError("series must be key:v1,v2,...");
    Series s;
    s.key = trim(std::string_view(it->second).substr(0, colon));
    if (!is_param_key(s.key)) throw ConfigError("series key is not a parameter: " + s.key);
    std::istringstream vs(it->second.substr(colon + 1));
    std::string item;
    while (std::getline(vs, item, ',')) s.values.push_back(parse_double(item, "series value"));
    if (s.values.empty()) throw ConfigError("series has no values");
    spec.series = std::move(s);
  }
  validate(spec);
  return spec;
}

void validate(const SweepSpec& spec) {
  if (spec.range.steps < 2) throw ConfigError("range needs at least 2 steps");
  if (!(spec.range.start < spec.range.stop)) throw ConfigError("range start must be below stop");
  if (spec.axis == Axis::g_over_kappa && spec.range.start < 0) {
    throw ConfigError("g_over_kappa range must be non-negative");
  }
  if (spec.axis == Axis::delta_p &&
      (spec.fixed.count("delta_p_over_kappa") || spec.fixed.count("delta_p_over_gamma") ||
       (spec.series && spec.series->key.rfind("delta_p", 0) == 0))) {
    throw ConfigError("delta_p is the sweep axis and cannot also be held fixed");
  }
  if (spec.axis == Axis::g_over_kappa && spec.series && spec.series->key == "g_over_kappa") {
    throw ConfigError("g_over_kappa is the sweep axis and cannot also be a series");
  }
  try {
    qrep::validate(spec.params);
    if (spec.series) {
      for (double v : spec.series->values) {
        Point pt{spec.params, 0.0};
        auto held = spec.fixed;
        set_param(pt, held, spec.series->key, v);
        qrep::validate(pt.params);
      }
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

std::vector<double> grid(const SweepRange& range) {
  std::vector<double> out(static_cast<std::size_t>(range.steps));
  const double step = (range.stop - range.start) / (range.steps - 1);
  for (int i = 0; i < range.steps; ++i) out[static_cast<std::size_t>(i)] = range.start + i * step;
  out.back() = range.stop;
  return out;
}

std::vector<std::string> quantity_columns(Quantity q) {
  switch (q) {
    case Quantity::reflection_magnitudes: return {"abs_r", "abs_n", "abs_r0", "r2_plus_n2"};
    case Quantity::phase_shifts: return {"theta0_over_pi", "theta_over_pi", "dtheta_over_pi"};
    case Quantity::gate_fidelities: return {"F_cpf", "F_pcg"};
    case Quantity::gate_efficiencies: return {"eta_cpf", "eta_pcg"};
    case Quantity::distribution_fidelities: return {"F_mh", "F_mv", "F_s"};
    case Quantity::distribution_efficiencies: return {"eta_m", "eta_s", "eta_s_two_pcg"};
  }
  return {};
}

Table run_sweep(const SweepSpec& spec) {
  validate(spec);
  Table t;
  const bool series_column =
      spec.series && spec.series->key != "g_over_kappa" && spec.series->key != "gamma_over_kappa" &&
      spec.series->key != "delta_p_over_kappa";
  if (series_column) t.columns.push_back(spec.series->key);
  for (const char* c : {"g_over_kappa", "gamma_over_kappa", "delta_over_kappa",
                        "delta_p_over_kappa"}) {
    t.columns.emplace_back(c);
  }
  for (auto& c : quantity_columns(spec.quantity)) t.columns.push_back(std::move(c));

  const std::vector<double> series_values =
      spec.series ? spec.series->values : std::vector<double>{0.0};
  const std::vector<double> axis = grid(spec.range);

  for (double sv : series_values) {
    for (double x : axis) {
      Point pt{spec.params, 0.0};
      auto held = spec.fixed;
      if (spec.series) set_param(pt, held, spec.series->key, sv);
      if (spec.axis == Axis::g_over_kappa) pt.params.g = x;

      if (spec.axis == Axis::delta_p) {
        pt.delta_p = x * pt.params.kappa;
      } else if (auto it = held.find("delta_p_over_kappa"); it != held.end()) {
        pt.delta_p = it->second * pt.params.kappa;
      } else if (auto jt = held.find("delta_p_over_gamma"); jt != held.end()) {
        pt.delta_p = jt->second * pt.params.gamma;
      }

      const auto values = evaluate(spec.quantity, pt);
      std::vector<double> row;
      row.reserve(t.columns.size());
      if (series_column) row.push_back(sv);
      for (double v : {pt.params.g, pt.params.gamma, pt.params.delta_cd, pt.delta_p})
        row.push_back(v / pt.params.kappa);
      row.insert(row.end(), values.begin(), values.end());
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(std::ostream& os, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    os << (i ? "," : "") << table.columns[i];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
    os << '\n';
  }
}

}  // namespace qrep
