#include <iostream>

#include "orgc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return orgc::run(args, std::cout, std::cerr);
}
