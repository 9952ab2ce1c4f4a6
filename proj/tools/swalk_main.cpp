#include <iostream>
#include <string>
#include <vector>

#include "swalk/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return swalk::run_command(args, std::cout, std::cerr);
}
