#include <iostream>

#include "orbconf/cli.hpp"

int main(int argc, char** argv) {
  return orbconf::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
