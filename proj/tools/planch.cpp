#include <iostream>
#include <string>
#include <vector>

#include "planch/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return planch::run_cli(args, std::cout, std::cerr);
}
