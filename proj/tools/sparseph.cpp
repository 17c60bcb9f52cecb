#include <iostream>

#include "sparseph/cli.hpp"

int main(int argc, char** argv) {
  return sparseph::cli::run(argc, argv, std::cout, std::cerr);
}
