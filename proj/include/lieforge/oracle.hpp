#pragma once

// Closed-form dimension counts for free Lie (super)algebras in
// characteristic 0, independent of the engine.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "lieforge/presentation.hpp"

namespace lieforge {

struct GeneratorCensus {
  std::map<int, std::pair<unsigned, unsigned>> byDegree;  // degree -> (even, odd)

  static GeneratorCensus of(const Presentation& p);
  void add(int degree, int sign);
};

struct ParityDims {
  std::uint64_t even = 0;
  std::uint64_t odd = 0;

  std::uint64_t total() const { return even + odd; }
  friend bool operator==(const ParityDims&, const ParityDims&) = default;
};

int mobius(int n);

// Necklace formula: (1/n) sum_{d | n} mu(d) q^(n/d), for n = 1..maxDegree.
std::vector<std::uint64_t> wittDims(unsigned generators, int maxDegree);

// Solves prod_d (1 - t^d)^(-e_d) (1 + s t^d)^(o_d) = 1 / (1 - sum_x s^|x| t^deg(x))
// modulo t^(maxDegree+1), with s^2 = 1 tracking parity.
std::vector<ParityDims> freeSuperDims(const GeneratorCensus& census, int maxDegree);

}  // namespace lieforge
