#include <iostream>
#include <string>
#include <vector>

#include "cliff/cli.hpp"

int main(int argc, char **argv) {
  return cliff::cli_main(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
