#include <iostream>

#include "emforge/cli.hpp"

int main(int argc, char** argv) {
  return emforge::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
