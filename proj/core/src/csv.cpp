#include "corners/csv.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace corners {

namespace {

void append_double(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

double parse_double(const std::string& field, std::size_t line_no) {
  double v = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto res = std::from_chars(begin, end, v);
  if (res.ec != std::errc{} || res.ptr != end) {
    std::ostringstream msg;
    msg << "csv: bad numeric field '" << field << "' on line " << line_no;
    throw std::invalid_argument(msg.str());
  }
  return v;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return true;
  }
  return false;
}

}  // namespace

void write_array_csv(const InterlacingArray& arr, std::ostream& out) {
  out << array_to_csv(arr);
}

std::string array_to_csv(const InterlacingArray& arr) {
  std::string out = "level,index,value\n";
  for (std::size_t k = 1; k <= arr.depth(); ++k) {
    for (std::size_t j = 1; j <= k; ++j) {
      out += std::to_string(k);
      out += ',';
      out += std::to_string(j);
      out += ',';
      append_double(out, arr(k, j));
      out += '\n';
    }
  }
  return out;
}

InterlacingArray array_from_csv(std::istream& in) {
  std::string line;
  if (!next_line(in, line) || line != "level,index,value")
    throw std::invalid_argument("csv: missing 'level,index,value' header");

  std::vector<std::vector<double>> levels;
  std::size_t expect_k = 1, expect_j = 1, line_no = 1;
  while (next_line(in, line)) {
    ++line_no;
    const auto fields = split_fields(line);
    if (fields.size() != 3) {
      std::ostringstream msg;
      msg << "csv: expected 3 fields on line " << line_no;
      throw std::invalid_argument(msg.str());
    }
    const auto k = static_cast<std::size_t>(parse_double(fields[0], line_no));
    const auto j = static_cast<std::size_t>(parse_double(fields[1], line_no));
    const double value = parse_double(fields[2], line_no);
    if (k != expect_k || j != expect_j) {
      std::ostringstream msg;
      msg << "csv: out-of-order entry (k=" << k << ", j=" << j << ") on line "
          << line_no << ", expected (k=" << expect_k << ", j=" << expect_j << ")";
      throw std::invalid_argument(msg.str());
    }
    if (j == 1) levels.emplace_back();
    levels.back().push_back(value);
    if (expect_j == expect_k) {
      ++expect_k;
      expect_j = 1;
    } else {
      ++expect_j;
    }
  }
  if (expect_j != 1)
    throw std::invalid_argument("csv: truncated array (incomplete last level)");
  return InterlacingArray::from_levels(levels);
}

InterlacingArray array_from_csv_string(const std::string& text) {
  std::istringstream in(text);
  return array_from_csv(in);
}

void write_series_csv(const std::map<std::string, std::vector<double>>& series,
                      std::ostream& out) {
  out << "series,value\n";
  std::string buf;
  for (const auto& [name, values] : series) {
    for (double v : values) {
      buf.clear();
      buf += name;
      buf += ',';
      append_double(buf, v);
      buf += '\n';
      out << buf;
    }
  }
}

std::map<std::string, std::vector<double>> read_series_csv(std::istream& in) {
  std::string line;
  if (!next_line(in, line) || line != "series,value")
    throw std::invalid_argument("csv: missing 'series,value' header");
  std::map<std::string, std::vector<double>> series;
  std::size_t line_no = 1;
  while (next_line(in, line)) {
    ++line_no;
    const std::size_t comma = line.rfind(',');
    if (comma == std::string::npos) {
      std::ostringstream msg;
      msg << "csv: expected 2 fields on line " << line_no;
      throw std::invalid_argument(msg.str());
    }
    series[line.substr(0, comma)].push_back(
        parse_double(line.substr(comma + 1), line_no));
  }
  return series;
}

}  // namespace corners
