#include <iostream>
#include <string>
#include <vector>

#include "swapdeon/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return swapdeon::run_cli(args, std::cout, std::cerr);
}
