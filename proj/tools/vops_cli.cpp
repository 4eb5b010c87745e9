#include <iostream>
#include <string>
#include <vector>

#include "vops/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vops::run_cli(args, std::cout, std::cerr);
}
