#include <iostream>
#include <string>
#include <vector>

#include "semiquad/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return semiquad::cli_dispatch(args, std::cout, std::cerr);
}
