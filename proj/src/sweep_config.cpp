#include "wfh/sweep_config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "wfh/errors.hpp"

namespace wfh {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double to_double(const std::string& key, const std::string& v) {
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (v.empty() || end != v.c_str() + v.size())
    throw ConfigError("'" + key + "': not a number: '" + v + "'");
  return x;
}

int to_int(const std::string& key, const std::string& v) {
  char* end = nullptr;
  const long x = std::strtol(v.c_str(), &end, 10);
  if (v.empty() || end != v.c_str() + v.size())
    throw ConfigError("'" + key + "': not an integer: '" + v + "'");
  return int(x);
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

using Entries = std::map<std::string, std::string>;  // "section.key" -> value

}  // namespace

std::string_view to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Baselines: return "baselines";
    case ExperimentKind::SingleQuadrature: return "single_quadrature";
    case ExperimentKind::PhotonStarved: return "photon_starved";
    case ExperimentKind::DoubleQuadrature: return "double_quadrature";
    case ExperimentKind::Gains: return "gains";
    case ExperimentKind::Ngm: return "ngm";
  }
  return "?";
}

ExperimentKind parse_experiment_kind(std::string_view s) {
  for (auto k : {ExperimentKind::Baselines, ExperimentKind::SingleQuadrature,
                 ExperimentKind::PhotonStarved, ExperimentKind::DoubleQuadrature,
                 ExperimentKind::Gains, ExperimentKind::Ngm})
    if (to_string(k) == s) return k;
  throw ConfigError("unknown experiment '" + std::string(s) + "'");
}

std::vector<double> GridSpec::values() const {
  validate();
  std::vector<double> v(points);
  const double lo = std::log10(min), hi = std::log10(max);
  for (int k = 0; k < points; ++k) v[k] = std::pow(10.0, lo + (hi - lo) * k / (points - 1));
  v.front() = min;
  v.back() = max;
  return v;
}

void GridSpec::validate() const {
  if (!(min > 0.0) || !(max >= min) || !std::isfinite(max))
    throw ConfigError("grid needs 0 < n_S_min <= n_S_max");
  if (points < 2) throw ConfigError("grid needs at least 2 points");
}

SweepConfig SweepConfig::defaults(ExperimentKind kind) {
  SweepConfig c;
  c.experiment = kind;
  switch (kind) {
    case ExperimentKind::Baselines:
      c.n_S_grid = {1e-3, 1e2, 51};
      c.M_list = {};
      break;
    case ExperimentKind::SingleQuadrature:
      c.n_S_grid = {1e-5, 10.0, 41};
      break;
    case ExperimentKind::PhotonStarved:
      c.n_S_grid = {1e-6, 1e-1, 26};
      break;
    case ExperimentKind::DoubleQuadrature:
      c.n_S_grid = {1e-2, 10.0, 31};
      break;
    case ExperimentKind::Gains:
      c.n_S_grid = {1e-1, 20.0, 24};
      c.M_list = {5, 10};
      break;
    case ExperimentKind::Ngm:
      c.n_S_grid = {1e-5, 10.0, 41};
      c.extra_n_S = {1e-4, 100.0};
      c.M_list = {5, 10};
      break;
  }
  return c;
}

std::vector<double> SweepConfig::n_S_values() const {
  auto v = n_S_grid.values();
  v.insert(v.end(), extra_n_S.begin(), extra_n_S.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void SweepConfig::validate() const {
  n_S_grid.validate();
  for (double x : extra_n_S)
    if (!(x > 0.0) || !std::isfinite(x)) throw ConfigError("extra n_S points must be positive");
  if (experiment != ExperimentKind::Baselines && M_list.empty())
    throw ConfigError("M list is empty");
  for (int M : M_list)
    if (M < 1) throw ConfigError("PNR resolution must be at least 1");
  for (int n : {nodes_uni, nodes_bi, nodes_gamma})
    if (n != 0 && n < 8) throw ConfigError("node counts must be 0 (default) or >= 8");
  if (threads < 1) throw ConfigError("threads must be at least 1");
  optimizer.validate();
}

SweepConfig parse_sweep_config(std::istream& in) {
  static const std::map<std::string, std::vector<std::string>> known = {
      {"sweep", {"experiment", "threads", "output"}},
      {"grid", {"n_S_min", "n_S_max", "points", "extra"}},
      {"detectors", {"M"}},
      {"quadrature", {"nodes_uni", "nodes_bi", "nodes_gamma"}},
      {"optimizer",
       {"z2_min", "z2_max", "coarse_points", "refine_tol", "starts", "nu_grid", "nu_tie_tol"}},
  };

  Entries e;
  std::string section, line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(where + "malformed section header");
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      if (!known.contains(section)) throw ConfigError(where + "unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + "expected key = value");
    if (section.empty()) throw ConfigError(where + "key outside of a section");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const auto& keys = known.at(section);
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw ConfigError(where + "unknown key '" + key + "' in [" + section + "]");
    e[section + "." + key] = trim(std::string_view(line).substr(eq + 1));
  }

  if (!e.contains("sweep.experiment")) throw ConfigError("missing [sweep] experiment");
  SweepConfig c = SweepConfig::defaults(parse_experiment_kind(e["sweep.experiment"]));
  auto get = [&](const char* k) -> const std::string* {
    const auto it = e.find(k);
    return it == e.end() ? nullptr : &it->second;
  };
  if (auto v = get("sweep.threads")) c.threads = to_int("threads", *v);
  if (auto v = get("sweep.output")) c.output_path = *v;
  if (auto v = get("grid.n_S_min")) c.n_S_grid.min = to_double("n_S_min", *v);
  if (auto v = get("grid.n_S_max")) c.n_S_grid.max = to_double("n_S_max", *v);
  if (auto v = get("grid.points")) c.n_S_grid.points = to_int("points", *v);
  if (auto v = get("grid.extra")) {
    c.extra_n_S.clear();
    for (const auto& s : split_list(*v)) c.extra_n_S.push_back(to_double("extra", s));
  }
  if (auto v = get("detectors.M")) {
    c.M_list.clear();
    for (const auto& s : split_list(*v)) c.M_list.push_back(to_int("M", s));
  }
  if (auto v = get("quadrature.nodes_uni")) c.nodes_uni = to_int("nodes_uni", *v);
  if (auto v = get("quadrature.nodes_bi")) c.nodes_bi = to_int("nodes_bi", *v);
  if (auto v = get("quadrature.nodes_gamma")) c.nodes_gamma = to_int("nodes_gamma", *v);
  auto& o = c.optimizer;
  if (auto v = get("optimizer.z2_min")) o.z2_min = to_double("z2_min", *v);
  if (auto v = get("optimizer.z2_max")) o.z2_max = to_double("z2_max", *v);
  if (auto v = get("optimizer.coarse_points")) o.coarse_points = to_int("coarse_points", *v);
  if (auto v = get("optimizer.refine_tol")) o.refine_tol = to_double("refine_tol", *v);
  if (auto v = get("optimizer.starts")) o.starts = to_int("starts", *v);
  if (auto v = get("optimizer.nu_tie_tol")) o.nu_tie_tol_bits = to_double("nu_tie_tol", *v);
  if (auto v = get("optimizer.nu_grid"); v && *v != "default") {
    o.nu_grid.clear();
    for (const auto& s : split_list(*v)) o.nu_grid.push_back(to_double("nu_grid", s));
  }
  c.validate();
  return c;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  return parse_sweep_config(in);
}

}  // namespace wfh
