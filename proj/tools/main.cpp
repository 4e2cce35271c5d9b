#include <iostream>
#include <string>
#include <vector>

#include "hgrig/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hgrig::run(args, std::cout, std::cerr);
}
