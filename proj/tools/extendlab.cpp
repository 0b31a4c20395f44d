#include <iostream>
#include <vector>

#include "extlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return extlab::run_cli(std::move(args), std::cout, std::cerr);
}
