#include "config.hpp"

#include "rayzeta/error.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace rayzeta::cli {
namespace {

std::int64_t parse_int(std::string_view text, const std::string& what) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError(what + ": expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& text, const std::string& seps) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : text) {
    if (seps.find(ch) != std::string::npos) {
      out.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  out.push_back(current);
  return out;
}

std::string as_string(const nlohmann::json& v, const std::string& key) {
  if (!v.is_string()) throw ConfigError("config key '" + key + "' must be a string");
  return v.get<std::string>();
}

std::int64_t as_int(const nlohmann::json& v, const std::string& key) {
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_string()) return parse_int(v.get<std::string>(), "config key '" + key + "'");
  throw ConfigError("config key '" + key + "' must be an integer");
}

std::pair<std::int64_t, std::int64_t> as_range(const nlohmann::json& v, const std::string& key) {
  if (v.is_string()) return parse_range(v.get<std::string>());
  if (v.is_number_integer()) return {v.get<std::int64_t>(), v.get<std::int64_t>()};
  if (v.is_array() && v.size() == 2) return {as_int(v[0], key), as_int(v[1], key)};
  throw ConfigError("config key '" + key + "' must be \"lo:hi\", an integer or [lo, hi]");
}

}  // namespace

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const std::vector<std::string> parts = split(text, ":");
  if (parts.size() == 1) {
    const std::int64_t v = parse_int(parts[0], "range");
    return {v, v};
  }
  if (parts.size() != 2) throw ConfigError("range must be 'lo:hi', got '" + text + "'");
  const std::int64_t lo = parse_int(parts[0], "range");
  const std::int64_t hi = parse_int(parts[1], "range");
  if (lo > hi) throw ConfigError("empty range '" + text + "'");
  return {lo, hi};
}

RayLabel parse_label(const std::string& text) {
  const std::vector<std::string> parts = split(text, ",");
  if (parts.size() != 2) throw ConfigError("label must be 'C,D', got '" + text + "'");
  return RayLabel{parse_int(parts[0], "label"), parse_int(parts[1], "label")};
}

std::vector<std::string> split_polys(const std::string& text) {
  std::vector<std::string> out;
  for (std::string& part : split(text, ";,")) {
    if (part.find_first_not_of(' ') == std::string::npos) throw ConfigError("empty polynomial in '" + text + "'");
    out.push_back(std::move(part));
  }
  return out;
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  throw ConfigError("format must be json or csv, got '" + text + "'");
}

RunConfig config_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("config document must be a JSON object");
  static const std::set<std::string> known{"command", "preset",   "f_poly", "a_polys",   "n_range", "n",
                                           "radicand", "q",       "k_range", "label",    "char",    "n_max",
                                           "criterion", "precision", "out",   "format"};
  RunConfig c;
  for (const auto& [key, value] : doc.items()) {
    if (!known.contains(key)) throw ConfigError("unknown config key '" + key + "'");
    if (key == "command") {
      c.command = as_string(value, key);
    } else if (key == "preset") {
      c.preset = as_string(value, key);
    } else if (key == "f_poly") {
      c.f_poly = as_string(value, key);
    } else if (key == "a_polys") {
      if (value.is_string()) {
        c.a_polys = split_polys(value.get<std::string>());
      } else if (value.is_array()) {
        for (const auto& p : value) c.a_polys.push_back(as_string(p, key));
      } else {
        throw ConfigError("config key 'a_polys' must be a string or an array of strings");
      }
    } else if (key == "n_range") {
      c.n_range = as_range(value, key);
    } else if (key == "n") {
      c.n = as_range(value, key);
    } else if (key == "radicand") {
      c.radicand = value.is_string() ? value.get<std::string>() : std::to_string(as_int(value, key));
    } else if (key == "q") {
      if (value.is_array()) {
        for (const auto& v : value) c.q.push_back(as_int(v, key));
      } else {
        c.q.push_back(as_int(value, key));
      }
    } else if (key == "k_range") {
      c.k_range = as_range(value, key);
    } else if (key == "label") {
      if (value.is_string()) {
        c.label = parse_label(value.get<std::string>());
      } else if (value.is_array() && value.size() == 2) {
        c.label = RayLabel{as_int(value[0], key), as_int(value[1], key)};
      } else {
        throw ConfigError("config key 'label' must be \"C,D\" or [C, D]");
      }
    } else if (key == "char") {
      c.character = value.is_string() ? value.get<std::string>() : character_from_json(value);
    } else if (key == "n_max") {
      c.n_max = as_int(value, key);
    } else if (key == "criterion") {
      if (value.is_array()) {
        for (const auto& v : value) c.criteria.push_back(as_string(v, key));
      } else {
        c.criteria.push_back(as_string(value, key));
      }
    } else if (key == "precision") {
      c.precision = static_cast<int>(as_int(value, key));
    } else if (key == "out") {
      c.out = as_string(value, key);
    } else if (key == "format") {
      c.format = parse_format(as_string(value, key));
    }
  }
  return c;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  try {
    return config_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
}

std::optional<FamilySpec> family_from_config(const RunConfig& config) {
  if (config.preset && (config.f_poly || !config.a_polys.empty())) {
    throw ConfigError("give either a preset or an inline family (f_poly, a_polys), not both");
  }
  if (config.preset) {
    FamilySpec spec = preset(*config.preset);
    if (config.n_range) std::tie(spec.n_min, spec.n_max) = *config.n_range;
    return spec;
  }
  if (!config.f_poly && config.a_polys.empty()) return std::nullopt;
  if (!config.f_poly || config.a_polys.empty()) throw ConfigError("an inline family needs both f_poly and a_polys");
  FamilySpec spec;
  spec.name = "inline";
  spec.f = Polynomial::parse(*config.f_poly);
  for (const std::string& p : config.a_polys) spec.a.push_back(Polynomial::parse(p));
  if (config.n_range) std::tie(spec.n_min, spec.n_max) = *config.n_range;
  spec.validate();
  return spec;
}

DirichletChar parse_character(const std::string& text, std::int64_t q) {
  if (text == "trivial") return DirichletChar::trivial(q);
  const std::vector<std::string> parts = split(text, ":");
  if (parts.size() != 2 && parts.size() != 3) {
    throw ConfigError("character must be 'trivial', 'order:g=e,...' or 'modulus:order:g=e,...', got '" + text + "'");
  }
  if (parts.size() == 3 && parse_int(parts[0], "character modulus") != q) {
    throw ConfigError("character modulus " + parts[0] + " differs from q = " + std::to_string(q));
  }
  const std::int64_t order = parse_int(parts[parts.size() - 2], "character order");
  std::vector<std::pair<std::int64_t, std::int64_t>> gens;
  const std::string& table = parts.back();
  if (!table.empty()) {
    for (const std::string& entry : split(table, ",")) {
      const std::vector<std::string> ge = split(entry, "=");
      if (ge.size() != 2) throw ConfigError("character generator entry must be 'g=e', got '" + entry + "'");
      gens.emplace_back(parse_int(ge[0], "character generator"), parse_int(ge[1], "character exponent"));
    }
  }
  return DirichletChar(q, order, gens);
}

std::string character_from_json(const nlohmann::json& value) {
  if (!value.is_object()) throw ConfigError("config key 'char' must be a string or an object");
  std::ostringstream out;
  std::optional<std::int64_t> modulus;
  std::optional<std::int64_t> order;
  std::string gens;
  for (const auto& [key, v] : value.items()) {
    if (key == "modulus") {
      modulus = as_int(v, "char.modulus");
    } else if (key == "order") {
      order = as_int(v, "char.order");
    } else if (key == "generators") {
      const auto add = [&gens](std::int64_t g, std::int64_t e) {
        if (!gens.empty()) gens += ",";
        gens += std::to_string(g) + "=" + std::to_string(e);
      };
      if (v.is_object()) {
        for (const auto& [g, e] : v.items()) add(parse_int(g, "char.generators"), as_int(e, "char.generators"));
      } else if (v.is_array()) {
        for (const auto& pair : v) {
          if (!pair.is_array() || pair.size() != 2) throw ConfigError("char.generators entries must be [g, e]");
          add(as_int(pair[0], "char.generators"), as_int(pair[1], "char.generators"));
        }
      } else {
        throw ConfigError("char.generators must be an object or an array of [g, e]");
      }
    } else {
      throw ConfigError("unknown config key 'char." + key + "'");
    }
  }
  if (!order) throw ConfigError("char.order is required");
  if (modulus) out << *modulus << ":";
  out << *order << ":" << gens;
  return out.str();
}

std::vector<std::int64_t> k_values(const RunConfig& config) {
  std::vector<std::int64_t> ks;
  for (std::int64_t k = config.k_range.first; k <= config.k_range.second; ++k) ks.push_back(k);
  if (ks.size() < 2) throw ConfigError("k range must contain at least two values");
  return ks;
}

std::int64_t single_q(const RunConfig& config) {
  if (config.q.empty()) throw ConfigError("--q is required");
  if (config.q.size() != 1) throw ConfigError("this command takes a single modulus q");
  return config.q.front();
}

}  // namespace rayzeta::cli
