#include <iostream>
#include <string>
#include <vector>

#include "kchev/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kchev::cli_main(args, std::cout, std::cerr);
}
