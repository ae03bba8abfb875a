#include <iostream>

#include "binomcong_cli/cli.hpp"

int main(int argc, char** argv) {
  return binomcong::cli::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
