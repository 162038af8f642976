#include <iostream>
#include <string>
#include <vector>

#include "plogic/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return plogic::cli::run(args, std::cout, std::cerr);
}
