#include <iostream>

#include "pmctw/cli.hpp"

int main(int argc, char** argv) {
  return pmctw::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
