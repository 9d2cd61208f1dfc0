#include <iostream>
#include <vector>

#include "qbforge/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qbforge::run_cli(args, std::cout, std::cerr);
}
