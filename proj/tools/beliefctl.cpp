#include <iostream>
#include <string>
#include <vector>

#include "belief/io/run.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return evidence::io::run(args, std::cout, std::cerr);
}
