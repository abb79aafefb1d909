#include "negcurve/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return negcurve::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
