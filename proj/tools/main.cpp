#include <iostream>
#include <vector>

#include "mahon/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return mahon::cli_run(args, std::cout, std::cerr);
}
