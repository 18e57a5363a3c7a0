#include <iostream>
#include <string>
#include <vector>

#include "weylalt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return weylalt::cli::run(args, std::cout, std::cerr);
}
