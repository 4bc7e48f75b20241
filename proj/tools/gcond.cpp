#include <iostream>
#include <string>
#include <vector>

#include "gcond/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  gcond::CommandOutcome r = gcond::run_command(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_status;
}
