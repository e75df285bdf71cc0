#include <iostream>
#include <string>
#include <vector>

#include "hycap/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = hycap::cli::run_command(args);
  std::cout << result.output;
  std::cerr << result.error;
  return result.exit_code;
}
