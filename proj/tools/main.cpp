#include <iostream>
#include <string>
#include <vector>

#include "kschur/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kschur::cli::run(args, std::cout, std::cerr);
}
