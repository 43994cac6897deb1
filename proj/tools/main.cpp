#include <iostream>

#include "sphclass/cli.hpp"

int main(int argc, char** argv) {
  return sphclass::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
