#include <iostream>
#include <string>
#include <vector>

#include "armafisher/cli.h"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return armafisher::cli::Run(args, std::cout, std::cerr);
}
