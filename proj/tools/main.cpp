#include <iostream>

#include "secform/cli.hpp"

int main(int argc, char** argv) {
  return secform::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout,
                          std::cerr);
}
