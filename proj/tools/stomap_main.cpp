#include <iostream>
#include <string>
#include <vector>

#include "stomap/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return stomap::run_cli(args, std::cout, std::cerr);
}
