#include <iostream>

#include "nodalcodes/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = nodalcodes::cli::dispatch(args);
  if (result.json) {
    std::cout << result.json->dump(2) << '\n';
  } else {
    std::cout << result.text;
  }
  std::cerr << result.error;
  return result.exit_code;
}
