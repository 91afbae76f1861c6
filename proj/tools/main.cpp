#include <iostream>

#include "starinv/cli.hpp"

int main(int argc, char** argv) {
  return starinv::cli::run(argc, argv, std::cout, std::cerr, std::cin);
}
