#include <cstdlib>
#include <iostream>

#include "cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  const char* env = std::getenv("RESTRICTION_LAB_OUT");
  return rlab_cli::run_cli(args, std::cout, std::cerr, env ? env : "");
}
