#pragma once

// Headline scalars recomputed from result rows alone, and the per-figure
// CSV slices.

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wfh/experiment.hpp"

namespace wfh {

/// Zero of a sampled curve, linear in log n_S between the bracketing samples.
/// Only sign changes from negative to positive count. Points need not be sorted.
std::optional<double> first_crossing(std::vector<std::pair<double, double>> n_S_and_diff);

struct Extreme {
  std::string experiment;
  std::string detector;
  std::string modulation;
  int M = 0;
  double n_S = 0.0;
  double value = 0.0;
};

struct DwCrossover {
  std::string experiment;
  int M = 0;
  std::optional<double> n_W;
};

struct NgmEnhancement {
  int M = 0;
  double max_d_ratio = 0.0;
  double n_S_ratio = 0.0;
  double max_d_gain = 0.0;
  double n_S_gain = 0.0;
};

struct Summary {
  std::optional<double> n_SH;
  std::optional<double> n_DH;
  std::vector<Extreme> max_gain;
  std::vector<Extreme> max_ratio;
  std::vector<Extreme> min_ratio;
  std::vector<DwCrossover> n_W;
  std::vector<NgmEnhancement> ngm;
};

Summary summarize(const std::vector<ResultRow>& rows);
void print_summary(const Summary& s, std::ostream& out);

/// Writes fig1.csv, fig4.csv ... fig11.csv into `dir` (created if missing).
/// Every slice uses the result-row schema except fig9.csv, which holds the
/// Gamma amplitude densities (columns nu,n_S,x,density).
void write_figures(const std::vector<ResultRow>& rows, const std::string& dir);

}  // namespace wfh
