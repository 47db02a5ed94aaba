#include <iostream>
#include <string>
#include <vector>

#include "rectflip/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rectflip::cli::run(args, std::cin, std::cout, std::cerr);
}
