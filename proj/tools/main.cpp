#include <iostream>
#include <string>
#include <vector>

#include "vdouble/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vdouble::run_command(args, std::cout, std::cerr);
}
