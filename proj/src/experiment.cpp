#include "wfh/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>
#include <tuple>

#include "wfh/baselines.hpp"
#include "wfh/errors.hpp"
#include "wfh/information.hpp"

namespace wfh {

namespace {

struct Cell {
  double n_S;
  int M;
  DetectorKind kind;
};

std::string describe(const SweepConfig& c, const Cell& cell) {
  std::string s = std::string(to_string(c.experiment)) + " cell n_S=" + std::to_string(cell.n_S);
  if (c.experiment != ExperimentKind::Baselines)
    s += " M=" + std::to_string(cell.M) + " detector=" + std::string(to_string(cell.kind));
  return s;
}

// Re-raises the active exception with the cell coordinates prepended,
// keeping its category.
[[noreturn]] void rethrow_with_context(std::exception_ptr ep, const std::string& where) {
  try {
    std::rethrow_exception(ep);
  } catch (const ConfigError& e) {
    throw ConfigError(where + ": " + e.what());
  } catch (const IoError& e) {
    throw IoError(where + ": " + e.what());
  } catch (const DomainError& e) {
    throw DomainError(where + ": " + e.what());
  } catch (const std::exception& e) {
    throw NumericError(where + ": " + e.what());
  }
}

int resolved_nodes(int configured, ModulationKind kind) {
  return configured > 0 ? configured : default_node_count(kind);
}

ResultRow make_row(const SweepConfig& c, double n_S, int M, std::string detector,
                   std::string modulation, double bits, Baseline shannon) {
  ResultRow r;
  r.experiment = std::string(to_string(c.experiment));
  r.n_S = n_S;
  r.M = M;
  r.detector = std::move(detector);
  r.modulation = std::move(modulation);
  r.bits_per_use = bits;
  r.pie = pie(bits, n_S);
  r.ratio = ratio_and_gain(bits, n_S, shannon).ratio;
  r.gain = ratio_and_gain(bits, n_S, Baseline::DD).gain;
  return r;
}

std::vector<ResultRow> baseline_rows(const SweepConfig& c, double n_S) {
  return {
      make_row(c, n_S, 0, "SH", "gaussian_uni", shannon_sh(n_S), Baseline::SH),
      make_row(c, n_S, 0, "DH", "gaussian_bi", shannon_dh(n_S), Baseline::SH),
      make_row(c, n_S, 0, "Holevo", "gaussian_bi", holevo(n_S), Baseline::SH),
      make_row(c, n_S, 0, "DD", "none", dd_upper_bound(n_S), Baseline::SH),
  };
}

std::vector<ResultRow> gaussian_row(const SweepConfig& c, const Cell& cell) {
  const bool bi = cell.kind == DetectorKind::DW;
  const auto scheme =
      bi ? ModulationScheme::gaussian_bi(cell.n_S) : ModulationScheme::gaussian_uni(cell.n_S);
  const int nodes = resolved_nodes(bi ? c.nodes_bi : c.nodes_uni, scheme.kind());
  const auto opt = optimize_z(cell.kind, PnrResolution(cell.M), scheme, nodes, c.optimizer);
  auto r = make_row(c, cell.n_S, cell.M, std::string(to_string(cell.kind)),
                    std::string(to_string(scheme.kind())), opt.bits,
                    shannon_baseline(cell.kind));
  r.z_opt = opt.z_opt;
  r.node_count = nodes;
  return {r};
}

std::vector<ResultRow> ngm_rows(const SweepConfig& c, const Cell& cell) {
  auto rows = gaussian_row(c, cell);
  const int nodes = resolved_nodes(c.nodes_gamma, ModulationKind::GammaUni);
  const auto opt = optimize_z_nu(PnrResolution(cell.M), cell.n_S, c.optimizer, nodes);
  auto r = make_row(c, cell.n_S, cell.M, "WH", "ngm_opt", opt.bits, Baseline::SH);
  r.z_opt = opt.z_opt;
  r.nu_opt = opt.nu_opt;
  r.node_count = nodes;
  rows.push_back(r);
  return rows;
}

std::vector<Cell> make_cells(const SweepConfig& c) {
  std::vector<Cell> cells;
  const auto grid = c.n_S_values();
  std::vector<DetectorKind> kinds;
  switch (c.experiment) {
    case ExperimentKind::Baselines:
      for (double n : grid) cells.push_back({n, 0, DetectorKind::WH});
      return cells;
    case ExperimentKind::SingleQuadrature:
    case ExperimentKind::PhotonStarved:
      kinds = {DetectorKind::WH, DetectorKind::HL};
      break;
    case ExperimentKind::DoubleQuadrature:
    case ExperimentKind::Gains:
      kinds = {DetectorKind::WH, DetectorKind::DW};
      break;
    case ExperimentKind::Ngm:
      kinds = {DetectorKind::WH};
      break;
  }
  for (double n : grid)
    for (int M : c.M_list)
      for (auto k : kinds) cells.push_back({n, M, k});
  // Expensive cells first so that the pool drains evenly.
  std::stable_sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    const auto cost = [](const Cell& x) {
      return x.kind == DetectorKind::DW ? x.n_S * x.M * x.M * 1e6 : x.n_S * x.M;
    };
    return cost(a) > cost(b);
  });
  return cells;
}

std::vector<ResultRow> run_cell(const SweepConfig& c, const Cell& cell) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<ResultRow> rows;
  if (c.experiment == ExperimentKind::Baselines)
    rows = baseline_rows(c, cell.n_S);
  else if (c.experiment == ExperimentKind::Ngm)
    rows = ngm_rows(c, cell);
  else
    rows = gaussian_row(c, cell);
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (auto& r : rows) r.wall_time_s = dt / double(rows.size());
  return rows;
}

}  // namespace

std::vector<ResultRow> run_experiment(const SweepConfig& config, const ProgressFn& progress) {
  config.validate();
  const auto cells = make_cells(config);
  std::vector<std::vector<ResultRow>> results(cells.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex mu;
  std::size_t done = 0;
  std::exception_ptr first_error;
  std::size_t error_cell = 0;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size() || failed.load()) return;
      try {
        results[i] = run_cell(config, cells[i]);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!first_error) first_error = std::current_exception(), error_cell = i;
        failed = true;
        return;
      }
      std::lock_guard lock(mu);
      ++done;
      if (progress) progress(done, cells.size());
    }
  };

  const int n_threads = std::max(1, std::min<int>(config.threads, int(cells.size())));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (first_error) rethrow_with_context(first_error, describe(config, cells[error_cell]));

  std::vector<ResultRow> rows;
  for (auto& r : results) rows.insert(rows.end(), r.begin(), r.end());
  std::stable_sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
    return std::tie(a.experiment, a.n_S, a.M, a.detector, a.modulation) <
           std::tie(b.experiment, b.n_S, b.M, b.detector, b.modulation);
  });
  return rows;
}

}  // namespace wfh
