#include <iostream>
#include <string>
#include <vector>

#include "delaycode/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return delaycode::run_cli(args, std::cout, std::cerr);
}
