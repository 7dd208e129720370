#include <cstdio>
#include <string>
#include <vector>

#include "mwtrisect/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const mwtrisect::CommandResult r = mwtrisect::run_command(args);
  std::fputs(r.out.c_str(), stdout);
  return r.exit_code;
}
