#include "tropical/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return tropical::cli::run_command(std::vector<std::string>(argv + 1, argv + argc), std::cin, std::cout,
                                    std::cerr);
}
