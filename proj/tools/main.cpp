#include <string>
#include <vector>

#include "motifcover/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return motifcover::cli_main(args);
}
