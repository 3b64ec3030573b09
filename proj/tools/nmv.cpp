#include <iostream>
#include <string>
#include <vector>

#include "nmv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nmv::run_cli(args, std::cout, std::cerr);
}
