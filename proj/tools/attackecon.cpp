#include <iostream>
#include <string>
#include <vector>

#include "attackecon/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return attackecon::cli::run(args, std::cout, std::cerr);
}
