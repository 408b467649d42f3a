#include <iostream>

#include "weakgen/cli.hpp"

int main(int argc, char** argv) {
  return weakgen::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
