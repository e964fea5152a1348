#pragma once

#include <string>
#include <vector>

namespace chronofit {

// Minimal CSV support for the pipeline's artifacts: comma separation,
// header row, no quoting or embedded commas (matches common weather-export
// formats). Lines ending in \r\n are accepted.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Column position by name; throws ParseError if absent.
  std::size_t column(const std::string& name) const;
};

CsvTable read_csv(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);
bool file_exists(const std::string& path);

// Shortest-width formatting used by all CSV artifacts ("%.10g" for data,
// "%.17g" for values that must survive a round trip).
std::string format_double(double v);
std::string format_double_exact(double v);

}  // namespace chronofit
