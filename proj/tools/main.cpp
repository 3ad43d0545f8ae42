#include <iostream>

#include "pluri/cli.hpp"

int main(int argc, char** argv) {
  return pluri::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
