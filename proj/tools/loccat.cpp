#include <iostream>

#include "loccat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return loccat::run_cli(args, std::cout, std::cerr);
}
