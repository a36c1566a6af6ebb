#include <iostream>
#include <string>
#include <vector>

#include "su3holo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return su3holo::cli::run(args, std::cout, std::cerr);
}
