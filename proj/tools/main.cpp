#include <iostream>
#include <string>
#include <vector>

#include "causatum/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto result = causatum::run_command(args);
  std::cout << result.output;
  return result.exit_code;
}
