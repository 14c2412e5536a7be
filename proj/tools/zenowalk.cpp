#include <iostream>
#include <string>
#include <vector>

#include "zenowalk/io/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return zenowalk::io::run_cli(args, std::cout, std::cerr);
}
