#include <iostream>

#include "rackmod/cli.hpp"

int main(int argc, char** argv) {
  return rackmod::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
