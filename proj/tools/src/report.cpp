#include "report.hpp"

#include "rayzeta/error.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace rayzeta::cli {
namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void csv_line(std::ostringstream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i != 0) out << ',';
    out << csv_field(fields[i]);
  }
  out << '\n';
}

}  // namespace

void Report::raise_exit(int code) {
  // Verification failures outrank hypothesis violations.
  if (code == 4 || exit_code == 0) exit_code = code;
}

std::string render_json(const Report& report) {
  // nlohmann::json objects are std::map backed, so keys come out sorted.
  return report.json.dump(2) + "\n";
}

std::string render_csv(const Report& report) {
  std::ostringstream out;
  csv_line(out, report.columns);
  for (const auto& row : report.rows) csv_line(out, row);
  return out.str();
}

std::string render(const Report& report, Format format) {
  return format == Format::json ? render_json(report) : render_csv(report);
}

void emit(const Report& report, Format format, const std::optional<std::string>& path, std::ostream& out) {
  const std::string text = render(report, format);
  if (!path || path->empty() || *path == "-") {
    out << text;
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw ConfigError("cannot write output file '" + *path + "'");
  file << text;
  if (!file) throw ConfigError("failed writing output file '" + *path + "'");
}

std::string approx_string(double value, int precision) {
  std::ostringstream out;
  out << std::setprecision(precision) << value;
  return out.str();
}

}  // namespace rayzeta::cli
