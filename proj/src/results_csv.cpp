#include "wfh/results_csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "wfh/errors.hpp"

namespace wfh {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double number(const std::string& s, int lineno) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size())
    throw ConfigError("CSV line " + std::to_string(lineno) + ": bad number '" + s + "'");
  return v;
}

}  // namespace

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.experiment << ',' << format_number(r.n_S) << ',' << r.M << ',' << r.detector << ','
        << r.modulation << ',' << format_number(r.bits_per_use) << ',' << format_number(r.pie)
        << ',' << format_number(r.ratio) << ',' << format_number(r.gain) << ','
        << format_number(r.z_opt) << ',' << (r.nu_opt ? format_number(*r.nu_opt) : "") << ','
        << r.node_count << ',' << format_number(r.wall_time_s) << '\n';
  }
}

void emit_csv(const std::vector<ResultRow>& rows, const std::string& path) {
  if (rows.empty()) throw DomainError("no result rows to write");
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_csv(rows, out);
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::vector<ResultRow> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw ConfigError("unexpected CSV header: " + line);
  std::vector<ResultRow> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != 13)
      throw ConfigError("CSV line " + std::to_string(lineno) + ": expected 13 fields");
    ResultRow r;
    r.experiment = f[0];
    r.n_S = number(f[1], lineno);
    r.M = int(number(f[2], lineno));
    r.detector = f[3];
    r.modulation = f[4];
    r.bits_per_use = number(f[5], lineno);
    r.pie = number(f[6], lineno);
    r.ratio = number(f[7], lineno);
    r.gain = number(f[8], lineno);
    r.z_opt = number(f[9], lineno);
    if (!f[10].empty()) r.nu_opt = number(f[10], lineno);
    r.node_count = int(number(f[11], lineno));
    r.wall_time_s = number(f[12], lineno);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<ResultRow> read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return parse_csv(in);
}

}  // namespace wfh
