#include <iostream>
#include <string>
#include <vector>

#include "boolfn/cli.hpp"

int main(int argc, char** argv) {
  return boolfn::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
