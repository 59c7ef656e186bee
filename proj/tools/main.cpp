#include "app.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return rayzeta::cli::run_app(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
