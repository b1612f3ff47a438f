#include <iostream>

#include "gctt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gctt::cli::run(args, std::cout, std::cerr);
}
