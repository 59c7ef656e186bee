#pragma once

#include "config.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace rayzeta::cli {

// Output of one subcommand. `json` is the canonical document; `columns` and
// `rows` are the flat table used for CSV.
struct Report {
  nlohmann::json json = nlohmann::json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> warnings;
  int exit_code = 0;

  void raise_exit(int code);
};

// Sorted keys, two-space indent, trailing newline.
std::string render_json(const Report& report);
// RFC 4180 quoting; header line first.
std::string render_csv(const Report& report);
std::string render(const Report& report, Format format);

// Writes to `path` or, when empty, to `out`. ConfigError if the file
// cannot be written.
void emit(const Report& report, Format format, const std::optional<std::string>& path, std::ostream& out);

std::string approx_string(double value, int precision);

}  // namespace rayzeta::cli
