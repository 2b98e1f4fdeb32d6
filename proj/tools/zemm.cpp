#include <iostream>
#include <string>
#include <vector>

#include "zemm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return zemm::cli::run(std::move(args), std::cout, std::cerr);
  } catch (const std::exception& ex) {
    std::cerr << "[zemm] fatal: " << ex.what() << "\n";
    return 3;
  }
}
