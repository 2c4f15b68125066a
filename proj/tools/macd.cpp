#include <iostream>

#include "macd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return macd::cli::run(args, std::cout, std::cerr);
}
