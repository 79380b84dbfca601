#include <iostream>

#include "mondec_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mondec::cli::run(args, std::cout, std::cerr);
}
