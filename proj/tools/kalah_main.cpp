#include <iostream>

#include "kalah/cli.hpp"

int main(int argc, char** argv) {
  return kalah::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
