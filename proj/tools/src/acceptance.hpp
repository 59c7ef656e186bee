#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rayzeta::cli {

struct AcceptanceOptions {
  std::vector<std::int64_t> qs{2, 3, 5};
  std::int64_t n_max_quadratic = 20;  // A1
  std::int64_t n_max = 12;            // A2..A9
  std::vector<std::int64_t> ks{0, 1, 2, 3, 4, 5, 6};
  std::uint64_t seed = 20240607;
  int random_quasi_polys = 100;
};

struct CriterionResult {
  std::string id;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

std::vector<std::string> criterion_ids();
// Runs the criteria named in `only` (all when empty), in id order.
// ConfigError for an unknown id.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, const std::vector<std::string>& only);

}  // namespace rayzeta::cli
