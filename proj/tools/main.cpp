#include "cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char **argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return fuzzassess::cli::run(args, std::cin, std::cout, std::cerr);
}
