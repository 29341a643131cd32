#include <iostream>
#include <string>
#include <vector>

#include "fisher_rao/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fisher_rao::cli::main_entry(args, std::cout, std::cerr);
}
