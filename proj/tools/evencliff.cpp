#include <iostream>

#include "evencliff/cli.hpp"

int main(int argc, char** argv) {
  try {
    return evencliff::run_cli(argc, argv, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}
