#include <iostream>
#include <string>
#include <vector>

#include "boxram/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return boxram::run(args, std::cout, std::cerr);
}
