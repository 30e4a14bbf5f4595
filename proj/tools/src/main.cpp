#include <iostream>
#include <string>
#include <vector>

#include "k3lm_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return k3lm::cli::run(args, std::cout, std::cerr);
}
