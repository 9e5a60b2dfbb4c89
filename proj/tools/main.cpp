#include <iostream>
#include <string>
#include <vector>

#include "ctwkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ctwkit::cli::run(args, std::cout, std::cerr);
}
