#include <iostream>
#include <string>
#include <vector>

#include "kripke/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kripke::cli::run(args, std::cout, std::cerr);
}
