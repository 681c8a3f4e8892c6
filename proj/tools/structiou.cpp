#include <iostream>
#include <string>
#include <vector>

#include "structiou/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return structiou::cli::run(args, std::cout, std::cerr);
}
