// Command-line driver for the weak-field homodyne rate library.
//
// Exit codes: 0 success, 1 configuration error, 2 numeric error, 3 I/O error.

#include <CLI11.hpp>
#include <cmath>
#include <iostream>
#include <optional>

#include "wfh/baselines.hpp"
#include "wfh/errors.hpp"
#include "wfh/information.hpp"
#include "wfh/lo_optimizer.hpp"
#include "wfh/results_csv.hpp"
#include "wfh/summary.hpp"
#include "wfh/sweep_config.hpp"

namespace {

enum Exit { kOk = 0, kConfig = 1, kNumeric = 2, kIo = 3 };

void print_capacity(double lo, double hi, int points) {
  const wfh::GridSpec grid{lo, hi, points};
  std::cout << "n_S,C_SH,C_DH,C_Holevo,C_DD\n";
  for (double n : grid.values())
    std::cout << wfh::format_number(n) << ',' << wfh::format_number(wfh::shannon_sh(n)) << ','
              << wfh::format_number(wfh::shannon_dh(n)) << ','
              << wfh::format_number(wfh::holevo(n)) << ','
              << wfh::format_number(wfh::dd_upper_bound(n)) << '\n';
}

struct PointArgs {
  std::string detector = "wh";
  int M = 5;
  double n_S = 1.0;
  double z = 1.0;
  bool optimize = false;
  std::optional<double> nu;
  bool bpsk = false;
  int nodes = 0;
};

void run_point(const PointArgs& a) {
  const auto kind = wfh::parse_detector_kind(a.detector);
  const wfh::PnrResolution M(a.M);
  if (kind == wfh::DetectorKind::DW && (a.nu || a.bpsk))
    throw wfh::ConfigError("non-Gaussian modulation is uni-variate; not available for DW");
  const auto scheme = kind == wfh::DetectorKind::DW ? wfh::ModulationScheme::gaussian_bi(a.n_S)
                      : a.bpsk ? wfh::ModulationScheme::bpsk(a.n_S)
                      : a.nu   ? wfh::ModulationScheme::from_shape(*a.nu, a.n_S)
                               : wfh::ModulationScheme::gaussian_uni(a.n_S);
  double z = a.z, bits = 0.0;
  if (a.optimize) {
    const auto opt = wfh::optimize_z(kind, M, scheme, a.nodes);
    z = opt.z_opt, bits = opt.bits;
  } else {
    bits = wfh::mutual_information(wfh::Detector{kind, wfh::DetectorConfig(M, z)}, scheme,
                                   a.nodes);
  }
  std::cout << "detector=" << wfh::to_string(kind) << '\n'
            << "M=" << a.M << '\n'
            << "n_S=" << wfh::format_number(a.n_S) << '\n'
            << "modulation=" << wfh::to_string(scheme.kind()) << '\n';
  if (scheme.kind() == wfh::ModulationKind::GammaUni)
    std::cout << "nu=" << wfh::format_number(scheme.nu()) << '\n';
  std::cout << "z=" << wfh::format_number(z) << '\n'
            << "bits_per_use=" << wfh::format_number(bits) << '\n';
  if (a.n_S > 0.0) {
    const auto rg = wfh::ratio_and_gain(bits, a.n_S, wfh::shannon_baseline(kind));
    std::cout << "pie=" << wfh::format_number(wfh::pie(bits, a.n_S)) << '\n'
              << "ratio=" << wfh::format_number(rg.ratio) << '\n'
              << "gain=" << wfh::format_number(wfh::ratio_and_gain(bits, a.n_S, wfh::Baseline::DD).gain)
              << '\n';
  }
}

void run_sweep(const std::string& config_path, const std::string& out_override) {
  auto cfg = wfh::load_sweep_config(config_path);
  if (!out_override.empty()) cfg.output_path = out_override;
  if (cfg.output_path.empty()) throw wfh::ConfigError("no output path (use --out or [sweep] output)");
  const auto rows = wfh::run_experiment(cfg, [](std::size_t done, std::size_t total) {
    std::cerr << "\r" << done << "/" << total << " cells" << std::flush;
  });
  std::cerr << '\n';
  wfh::emit_csv(rows, cfg.output_path);
  std::cerr << "wrote " << rows.size() << " rows to " << cfg.output_path << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Information rates of weak-field homodyne receivers"};
  app.require_subcommand(1);

  auto* cap = app.add_subcommand("capacity", "print the baseline capacity table");
  double cap_lo = 1e-3, cap_hi = 1e2;
  int cap_points = 51;
  cap->add_option("--min", cap_lo, "smallest n_S");
  cap->add_option("--max", cap_hi, "largest n_S");
  cap->add_option("--points", cap_points, "log-spaced grid points");

  auto* point = app.add_subcommand("point", "evaluate one mutual information");
  PointArgs pa;
  point->add_option("--detector", pa.detector, "wh, hl or dw")->required();
  point->add_option("--M", pa.M, "PNR resolution")->required();
  point->add_option("--nS", pa.n_S, "mean received energy")->required();
  point->add_option("--z", pa.z, "LO amplitude");
  point->add_flag("--optimize-z", pa.optimize, "maximize over the LO energy");
  auto* nu_opt = point->add_option("--nu", pa.nu, "Gamma shape (>= 0.5)");
  point->add_flag("--bpsk", pa.bpsk, "BPSK modulation")->excludes(nu_opt);
  point->add_option("--nodes", pa.nodes, "quadrature node count (0 = default)");

  auto* sweep = app.add_subcommand("sweep", "run a sweep and write a CSV");
  std::string sweep_cfg, sweep_out;
  sweep->add_option("--config", sweep_cfg, "sweep configuration file")->required();
  sweep->add_option("--out", sweep_out, "output CSV (overrides [sweep] output)");

  auto* summary = app.add_subcommand("summary", "headline numbers from a result CSV");
  std::string summary_in;
  summary->add_option("--in", summary_in, "result CSV")->required();

  auto* figures = app.add_subcommand("figures", "per-figure CSV slices");
  std::string fig_in, fig_out;
  figures->add_option("--in", fig_in, "result CSV")->required();
  figures->add_option("--out", fig_out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfig;
  }

  try {
    if (*cap) print_capacity(cap_lo, cap_hi, cap_points);
    if (*point) run_point(pa);
    if (*sweep) run_sweep(sweep_cfg, sweep_out);
    if (*summary) wfh::print_summary(wfh::summarize(wfh::read_csv(summary_in)), std::cout);
    if (*figures) wfh::write_figures(wfh::read_csv(fig_in), fig_out);
  } catch (const wfh::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const wfh::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfig;
  } catch (const wfh::DomainError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kNumeric;
  }
  return kOk;
}
