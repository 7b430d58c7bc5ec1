#include <iostream>
#include <string>
#include <vector>

#include "abduction/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return abduction::run_command(args, std::cout, std::cerr);
}
