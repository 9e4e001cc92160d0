#include <iostream>
#include <string>
#include <vector>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return bcjq::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
