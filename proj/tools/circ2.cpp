#include <iostream>
#include <string>
#include <vector>

#include "circ2/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return circ2::cli::main(args, std::cout, std::cerr);
}
