#include <iostream>

#include "quatsurf/cli.hpp"

int main(int argc, char** argv) {
  return quatsurf::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
