#include <iostream>

#include "mixedmeans/cli.hpp"

int main(int argc, char** argv) {
  return mixedmeans::run_cli(argc, argv, std::cout, std::cerr);
}
