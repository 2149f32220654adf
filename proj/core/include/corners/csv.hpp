#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "corners/interlacing_array.hpp"

namespace corners {

/// Writes one array as CSV with header "level,index,value", one row per entry,
/// ordered k ascending then j ascending. Values are printed with enough digits
/// to round-trip exactly.
void write_array_csv(const InterlacingArray& arr, std::ostream& out);
std::string array_to_csv(const InterlacingArray& arr);

/// Parses the format written by write_array_csv. Rows must appear in the
/// canonical order; a level with a wrong entry count is a shape error.
/// Throws std::invalid_argument on malformed input.
InterlacingArray array_from_csv(std::istream& in);
InterlacingArray array_from_csv_string(const std::string& text);

/// Named sample series ("series,value" rows), the interchange format between
/// the experiment runner and plot-data.
void write_series_csv(const std::map<std::string, std::vector<double>>& series,
                      std::ostream& out);
std::map<std::string, std::vector<double>> read_series_csv(std::istream& in);

}  // namespace corners
