#include <iostream>

#include "burnside/cli.hpp"

int main(int argc, char** argv) {
  return burnside::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
