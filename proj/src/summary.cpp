#include "wfh/summary.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <tuple>

#include "wfh/errors.hpp"
#include "wfh/modulation.hpp"
#include "wfh/results_csv.hpp"

namespace wfh {

namespace {

using SeriesKey = std::tuple<std::string, std::string, std::string, int>;

std::map<SeriesKey, std::vector<const ResultRow*>> by_series(const std::vector<ResultRow>& rows) {
  std::map<SeriesKey, std::vector<const ResultRow*>> out;
  for (const auto& r : rows) {
    if (r.experiment == "baselines") continue;
    out[{r.experiment, r.detector, r.modulation, r.M}].push_back(&r);
  }
  return out;
}

Extreme extreme_of(const SeriesKey& key, const std::vector<const ResultRow*>& rows,
                   double ResultRow::*field, bool largest) {
  const ResultRow* best = rows.front();
  for (const auto* r : rows)
    if (largest ? r->*field > best->*field : r->*field < best->*field) best = r;
  return {std::get<0>(key), std::get<1>(key), std::get<2>(key), std::get<3>(key), best->n_S,
          best->*field};
}

std::string opt(const std::optional<double>& v) { return v ? format_number(*v) : "none"; }

}  // namespace

std::optional<double> first_crossing(std::vector<std::pair<double, double>> pts) {
  std::sort(pts.begin(), pts.end());
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const auto [x0, d0] = pts[i];
    const auto [x1, d1] = pts[i + 1];
    if (d0 < 0.0 && d1 >= 0.0) {
      const double t = d0 / (d0 - d1);
      return std::exp(std::log(x0) + t * (std::log(x1) - std::log(x0)));
    }
  }
  return std::nullopt;
}

Summary summarize(const std::vector<ResultRow>& rows) {
  Summary s;

  std::map<double, std::map<std::string, double>> base;
  for (const auto& r : rows)
    if (r.experiment == "baselines") base[r.n_S][r.detector] = r.bits_per_use;
  std::vector<std::pair<double, double>> sh, dh;
  for (const auto& [n, caps] : base) {
    if (!caps.contains("DD")) continue;
    if (caps.contains("SH")) sh.emplace_back(n, caps.at("SH") - caps.at("DD"));
    if (caps.contains("DH")) dh.emplace_back(n, caps.at("DH") - caps.at("DD"));
  }
  s.n_SH = first_crossing(sh);
  s.n_DH = first_crossing(dh);

  for (const auto& [key, series] : by_series(rows)) {
    s.max_gain.push_back(extreme_of(key, series, &ResultRow::gain, true));
    s.max_ratio.push_back(extreme_of(key, series, &ResultRow::ratio, true));
    s.min_ratio.push_back(extreme_of(key, series, &ResultRow::ratio, false));
  }

  // DW - WH per (experiment, M) under Gaussian modulation.
  std::map<std::pair<std::string, int>, std::map<double, std::map<std::string, double>>> dw;
  for (const auto& r : rows)
    if ((r.detector == "WH" && r.modulation == "gaussian_uni") ||
        (r.detector == "DW" && r.modulation == "gaussian_bi"))
      dw[{r.experiment, r.M}][r.n_S][r.detector] = r.bits_per_use;
  for (const auto& [key, pts] : dw) {
    std::vector<std::pair<double, double>> diff;
    for (const auto& [n, v] : pts)
      if (v.contains("WH") && v.contains("DW")) diff.emplace_back(n, v.at("DW") - v.at("WH"));
    if (!diff.empty()) s.n_W.push_back({key.first, key.second, first_crossing(diff)});
  }

  std::map<int, std::map<double, std::pair<const ResultRow*, const ResultRow*>>> ngm;
  for (const auto& r : rows) {
    if (r.experiment != "ngm" || r.detector != "WH") continue;
    if (r.modulation == "gaussian_uni") ngm[r.M][r.n_S].first = &r;
    if (r.modulation == "ngm_opt") ngm[r.M][r.n_S].second = &r;
  }
  for (const auto& [M, pts] : ngm) {
    NgmEnhancement e{M, -INFINITY, 0.0, -INFINITY, 0.0};
    bool any = false;
    for (const auto& [n, pair] : pts) {
      if (!pair.first || !pair.second) continue;
      any = true;
      const double dr = pair.second->ratio - pair.first->ratio;
      const double dg = pair.second->gain - pair.first->gain;
      if (dr > e.max_d_ratio) e.max_d_ratio = dr, e.n_S_ratio = n;
      if (dg > e.max_d_gain) e.max_d_gain = dg, e.n_S_gain = n;
    }
    if (any) s.ngm.push_back(e);
  }
  return s;
}

void print_summary(const Summary& s, std::ostream& out) {
  out << "crossover n_SH (C_SH = C_DD): " << opt(s.n_SH) << '\n';
  out << "crossover n_DH (C_DH = C_DD): " << opt(s.n_DH) << '\n';
  for (const auto& c : s.n_W)
    out << "crossover n_W (I_DW = I_WH) " << c.experiment << " M=" << c.M << ": " << opt(c.n_W)
        << '\n';
  auto table = [&](const char* name, const std::vector<Extreme>& v) {
    for (const auto& e : v)
      out << name << ' ' << e.experiment << ' ' << e.detector << ' ' << e.modulation
          << " M=" << e.M << ": " << format_number(e.value) << " at n_S=" << format_number(e.n_S)
          << '\n';
  };
  table("max gain", s.max_gain);
  table("max ratio", s.max_ratio);
  table("min ratio", s.min_ratio);
  for (const auto& e : s.ngm)
    out << "ngm enhancement M=" << e.M << ": max dR=" << format_number(e.max_d_ratio)
        << " at n_S=" << format_number(e.n_S_ratio) << ", max dG=" << format_number(e.max_d_gain)
        << " at n_S=" << format_number(e.n_S_gain) << '\n';
}

void write_figures(const std::vector<ResultRow>& rows, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory '" + dir + "': " + ec.message());

  auto slice = [&](const std::string& name, auto pred) {
    std::vector<ResultRow> part;
    for (const auto& r : rows)
      if (pred(r)) part.push_back(r);
    const auto path = (std::filesystem::path(dir) / name).string();
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    write_csv(part, out);
    if (!out) throw IoError("write to '" + path + "' failed");
  };
  auto in = [](const ResultRow& r, const char* e) { return r.experiment == e; };

  slice("fig1.csv", [&](const ResultRow& r) { return in(r, "baselines"); });
  slice("fig4.csv", [&](const ResultRow& r) { return in(r, "single_quadrature"); });
  slice("fig5.csv", [&](const ResultRow& r) { return in(r, "photon_starved"); });
  slice("fig6.csv", [&](const ResultRow& r) { return in(r, "double_quadrature"); });
  slice("fig7.csv", [&](const ResultRow& r) { return in(r, "gains"); });
  slice("fig8.csv", [&](const ResultRow& r) { return in(r, "double_quadrature"); });
  slice("fig10.csv", [&](const ResultRow& r) { return in(r, "ngm") && r.modulation == "ngm_opt"; });
  slice("fig11.csv", [&](const ResultRow& r) { return in(r, "ngm"); });

  const auto path = (std::filesystem::path(dir) / "fig9.csv").string();
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << "nu,n_S,x,density\n";
  const double n_S = 4.0;
  for (double nu : {0.5, 2.0, 10.0})
    for (int k = 0; k <= 400; ++k) {
      const double x = -8.0 + 16.0 * k / 400.0;
      out << format_number(nu) << ',' << format_number(n_S) << ',' << format_number(x) << ','
          << format_number(gamma_amplitude_density(x, nu, n_S)) << '\n';
    }
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace wfh
