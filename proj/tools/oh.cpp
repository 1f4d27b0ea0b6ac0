#include <iostream>

#include "oh/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const oh::RunResult r = oh::run(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.code;
}
