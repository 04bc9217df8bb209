#include <iostream>
#include <string>
#include <vector>

#include "gmaderiv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gmaderiv::cli::run(args, std::cout, std::cerr);
}
