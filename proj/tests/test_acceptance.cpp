// Runs the ten-point acceptance suite; prints one line per criterion and
// exits nonzero if any fails.
#include <cstdlib>
#include <iostream>

#include "gentle/selfcheck.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
  gentle::SelfCheckReport rep = gentle::run_acceptance(std::cout, seed);
  return rep.all_pass() ? 0 : 1;
}
