#include "acceptance.hpp"

#include <cstdio>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  const std::vector<std::string> only(argv + 1, argv + argc);
  const auto results = rayzeta::cli::run_acceptance(rayzeta::cli::AcceptanceOptions{}, only);
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    std::printf("%s %s  %s (%.2fs): %s\n", r.id.c_str(), r.pass ? "PASS" : "FAIL", r.title.c_str(), r.seconds,
                r.detail.c_str());
  }
  return all ? 0 : 1;
}
