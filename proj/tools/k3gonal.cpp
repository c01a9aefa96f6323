#include <iostream>

#include "k3gonal/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return k3g::cli::run(args, std::cout, std::cerr);
}
