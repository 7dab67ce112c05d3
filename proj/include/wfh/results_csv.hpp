#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wfh/experiment.hpp"

namespace wfh {

inline constexpr const char* kCsvHeader =
    "experiment,n_S,M,detector,modulation,bits_per_use,pie,ratio,gain,z_opt,nu_opt,node_count,"
    "wall_time_s";

/// 12 significant digits; infinity as "inf".
std::string format_number(double v);

void write_csv(const std::vector<ResultRow>& rows, std::ostream& out);
/// Throws DomainError on empty rows and IoError when the file cannot be written.
void emit_csv(const std::vector<ResultRow>& rows, const std::string& path);

/// Throws ConfigError on a malformed header or row.
std::vector<ResultRow> parse_csv(std::istream& in);
std::vector<ResultRow> read_csv(const std::string& path);

}  // namespace wfh
