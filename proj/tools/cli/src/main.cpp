#include <iostream>
#include <string>
#include <vector>

#include "bca/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bca::cli::run(args, std::cout, std::cerr);
}
