#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "knlab/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> env;
  if (const char* p = std::getenv("KN_PRECISION")) env = p;
  return knlab::cli::run(args, std::cout, std::cerr, env);
}
