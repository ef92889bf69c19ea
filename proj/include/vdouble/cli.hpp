#ifndef VDOUBLE_CLI_HPP
#define VDOUBLE_CLI_HPP

#include <chrono>
#include <iosfwd>
#include <string>
#include <vector>

namespace vdouble {

// Runs one command line (without the program name). Returns 0 on success, 1 on
// a domain or I/O error and 2 on a usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct DemoRow {
  std::string label;
  std::string detail;
  bool pass = false;
  std::chrono::microseconds elapsed{0};
};

// The worked computations for the virtual trefoil and its spin, in order,
// each checked against its recorded value.
std::vector<DemoRow> run_demo();

}  // namespace vdouble

#endif  // VDOUBLE_CLI_HPP
