#include <iostream>
#include <string>
#include <vector>

#include "neuberg/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return neuberg::run(args, std::cout, std::cerr);
}
