#include <iostream>
#include <string>
#include <vector>

#include "bohr/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return bohr::cli::run(args, std::cout, std::cerr);
}
