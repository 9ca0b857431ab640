#include <iostream>
#include <string>
#include <vector>

#include "dstar_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dstar::cli::run(args, std::cout, std::cerr, std::cin, dstar::cli::want_color());
}
