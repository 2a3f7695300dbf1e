#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "swapdeon/formula.hpp"

#ifndef SWAPDEON_FIXTURES
#define SWAPDEON_FIXTURES "fixtures"
#endif

namespace swapdeon::testing {

inline std::string fixture_path(const std::string& rel) {
  return std::string(SWAPDEON_FIXTURES) + "/" + rel;
}

inline std::string read_fixture(const std::string& rel) {
  std::ifstream in(fixture_path(rel), std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Random primitive formula of depth <= `depth`. Circ only under Sigma.
inline Formula random_formula(std::mt19937& rng, int depth, Signature sig) {
  static const char* names[] = {"p", "q", "r", "s1", "x_y", "pO"};
  std::uniform_int_distribution<int> pick(0, 7);
  int k = depth <= 0 ? 0 : pick(rng);
  switch (k) {
    case 0:
    case 1:
      return Formula::atom(names[std::uniform_int_distribution<int>(0, 5)(rng)]);
    case 2:
      return Formula::neg(random_formula(rng, depth - 1, sig));
    case 3:
      return sig == Signature::Sigma
                 ? Formula::circ(random_formula(rng, depth - 1, sig))
                 : Formula::neg(random_formula(rng, depth - 1, sig));
    case 4:
      return Formula::obl(random_formula(rng, depth - 1, sig));
    case 5:
      return Formula::conj(random_formula(rng, depth - 1, sig),
                           random_formula(rng, depth - 1, sig));
    case 6:
      return Formula::disj(random_formula(rng, depth - 1, sig),
                           random_formula(rng, depth - 1, sig));
    default:
      return Formula::imp(random_formula(rng, depth - 1, sig),
                          random_formula(rng, depth - 1, sig));
  }
}

}  // namespace swapdeon::testing
