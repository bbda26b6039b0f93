#include <iostream>
#include <string>
#include <vector>

#include "sicinfo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return sicinfo::cli::run(args, std::cout, std::cerr);
}
