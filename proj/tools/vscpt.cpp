#include <string>
#include <vector>

#include "vscpt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return vscpt::cli::main_entry(args);
}
