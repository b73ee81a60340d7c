#include <iostream>
#include <string>
#include <vector>

#include "dtriple/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dtriple::cli::run(args, std::cout, std::cerr);
}
