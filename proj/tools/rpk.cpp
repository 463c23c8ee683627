#include <iostream>

#include "rpk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rpk::run_cli(args, std::cout, std::cerr);
}
