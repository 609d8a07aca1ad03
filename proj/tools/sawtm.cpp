#include <iostream>
#include <string>
#include <vector>

#include "sawtm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sawtm::run_cli(args, std::cout, std::cerr);
}
