#include <iostream>
#include <string>
#include <vector>

#include "avoid1324/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return avoid1324::cli::run(args, std::cout, std::cerr);
}
