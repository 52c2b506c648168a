#include <iostream>
#include <string>
#include <vector>

#include "sigmalucas/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sigmalucas::cli::run(args, std::cout, std::cerr);
}
