#pragma once

// Differentials extended to the whole algebra as derivations,
//   d[x, h] = [dx, h] + (-1)^|x| [x, dh],
// and the bigraded homology of the resulting chain complex.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "lieforge/algebra.hpp"

namespace lieforge {

struct HomologyOptions {
  // false drops the (-1)^|x| factor; kept only to compare conventions
  bool koszulSigns = true;
};

struct HomologyTable {
  int maxDegree = 0;
  // rows[h][d-1] for homological degree h in [0, maxDegree) and d in [1, maxDegree]
  std::vector<std::vector<std::size_t>> rows;
  // every nonzero H(d, h) with d <= maxDegree, including h >= maxDegree
  std::map<std::pair<int, int>, std::size_t> all;

  std::size_t at(int degree, int homDegree) const {
    auto it = all.find({degree, homDegree});
    return it == all.end() ? 0 : it->second;
  }
};

// Normal form of d(w).
Element differentialOfWord(LieAlgebra& alg, const LieWord& w, HomologyOptions options = {});
Element differential(LieAlgebra& alg, const Element& e, HomologyOptions options = {});

// Checks d(relation) = 0, d(d(x)) = 0 on generators and the bidegree typing
// of every declared image, for everything of degree <= maxDegree.
ValidationReport checkDifferential(LieAlgebra& alg, int maxDegree, HomologyOptions options = {});

// Checks that consecutive differential matrices compose to zero.
ValidationReport checkSquareZero(LieAlgebra& alg, int maxDegree, HomologyOptions options = {});

// Rank of d: L(d,h) -> L(d,h-1).
std::size_t differentialRank(LieAlgebra& alg, int degree, int homDegree, HomologyOptions options = {});

// Throws ValidationError when checkDifferential fails.
HomologyTable homologyTable(LieAlgebra& alg, int maxDegree, HomologyOptions options = {});

}  // namespace lieforge
