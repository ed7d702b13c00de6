#include <cstdio>
#include <string>
#include <vector>

#include "hpi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  hpi::CliResult r = hpi::run_command(args);
  std::fputs(r.out.c_str(), stdout);
  return r.exit_code;
}
