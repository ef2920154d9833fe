#include <iostream>
#include <string>
#include <vector>

#include "grim/job.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return grim::cli_main(args, std::cout, std::cerr);
}
