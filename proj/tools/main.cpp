// Copyright 2026 vicyl Contributors
// Licensed under Apache 2.0

#include <iostream>
#include <string>
#include <vector>

#include "vicyl/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vicyl::run_cli(args, std::cout, std::cerr);
}
