#include <iostream>

#include "numrat/cli.hpp"

int main(int argc, char** argv) {
  return numrat::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
