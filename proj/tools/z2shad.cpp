#include <iostream>

#include "z2s/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return z2s::cli::run(args, std::cout, std::cerr);
}
