#include <iostream>
#include <string>
#include <vector>

#include "malleq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return malleq::run_cli(args, std::cout, std::cerr);
}
