#include <iostream>
#include <string>
#include <vector>

#include "fibcube/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return fibcube::run_cli(args, std::cout, std::cerr);
}
