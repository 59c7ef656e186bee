#pragma once

#include "rayzeta/family.hpp"
#include "rayzeta/hecke.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rayzeta::cli {

enum class Format { json, csv };

// Parameters shared by all subcommands. A JSON config document fills these
// first; command-line flags then override individual fields.
struct RunConfig {
  std::string command;

  std::optional<std::string> preset;
  std::optional<std::string> f_poly;
  std::vector<std::string> a_polys;
  std::optional<std::pair<std::int64_t, std::int64_t>> n_range;  // validity range of an inline family
  std::optional<std::pair<std::int64_t, std::int64_t>> n;        // single n or n_lo:n_hi
  std::optional<std::string> radicand;

  std::vector<std::int64_t> q;
  std::pair<std::int64_t, std::int64_t> k_range{0, 6};
  std::optional<RayLabel> label;
  std::optional<std::string> character;
  std::optional<std::int64_t> n_max;  // verify only
  std::vector<std::string> criteria;  // verify only
  int precision = 6;

  std::optional<std::string> out;
  Format format = Format::json;
};

// Reads a JSON object; unknown keys and ill-typed values are ConfigErrors.
RunConfig config_from_json(const nlohmann::json& doc);
RunConfig load_config_file(const std::string& path);

// "5" -> (5, 5), "1:20" -> (1, 20).
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text);
// "1,0" -> (1, 0).
RayLabel parse_label(const std::string& text);
// "p0;p1" or "p0,p1".
std::vector<std::string> split_polys(const std::string& text);
Format parse_format(const std::string& text);

// The family named by `preset` or given inline by f_poly/a_polys; nullopt
// if neither is present.
std::optional<FamilySpec> family_from_config(const RunConfig& config);

// "trivial", "order:g=e,g=e" or "modulus:order:g=e,..." for a character
// mod q.
DirichletChar parse_character(const std::string& text, std::int64_t q);
// The JSON form {"modulus": q, "order": m, "generators": [[g, e], ...]},
// serialized back into the string form.
std::string character_from_json(const nlohmann::json& value);

std::vector<std::int64_t> k_values(const RunConfig& config);
std::int64_t single_q(const RunConfig& config);

}  // namespace rayzeta::cli
