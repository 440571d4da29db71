#include <iostream>

#include "unitdist/cli.hpp"

int main(int argc, char** argv) {
  return unitdist::cli::run_cli(argc, argv, std::cout, std::cerr);
}
