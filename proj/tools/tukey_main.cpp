#include <iostream>
#include <string>
#include <vector>

#include "tukey/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tukey::run(args, std::cout, std::cerr);
}
