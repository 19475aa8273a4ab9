#include <iostream>

#include "easycat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return easycat::run_cli(args, std::cout, std::cerr);
}
