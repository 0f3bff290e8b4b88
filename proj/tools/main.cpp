#include <iostream>
#include <string>
#include <vector>

#include "cliff/cli.hpp"

int main(int argc, char** argv) {
  return cliff::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
