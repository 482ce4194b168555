#include <iostream>

#include "monolat/cli.hpp"

int main(int argc, char** argv) {
  return monolat::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
