#include <iostream>

#include "cliquetree/cli.hpp"

int main(int argc, char** argv) {
  return cliquetree::run_cli(argc, argv, std::cout, std::cerr);
}
