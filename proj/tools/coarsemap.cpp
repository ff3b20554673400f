#include <iostream>
#include <string>
#include <vector>

#include "coarsemap/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return coarsemap::cli::run_cli(args, std::cout, std::cerr);
}
