#include <iostream>

#include "taft/cli.hpp"

int main(int argc, char** argv) {
  return taft::run_cli(argc, argv, std::cout, std::cerr);
}
