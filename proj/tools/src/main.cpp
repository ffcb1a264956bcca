#include <iostream>

#include "hyperbound/cli.hpp"

int main(int argc, char** argv) {
  return hyperbound::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
