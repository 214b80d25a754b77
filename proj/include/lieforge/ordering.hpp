#pragma once

// Word encoding and the total order used for reduction rules.
//
// A right-normed word is encoded as a set of leveled letters: the rightmost
// letter gets level 1 and a letter prepended to a suffix of total degree D
// gets level D + 1. So [b,[b,a]] is b3 b2 a1 and [a,c] (deg c = 2) is a3 c1.
// Levels within one word are distinct and increasing to the left, which makes
// the encoding injective.
//
// Words of equal degree are compared by graded reverse lexicographic order on
// the variables listed by (level, generator index) ascending: e1 > e2 iff the
// highest listed variable where the exponents differ has the smaller exponent
// in e1. Words of different degree compare by degree.

#include <compare>
#include <span>
#include <utility>
#include <vector>

#include "lieforge/presentation.hpp"

namespace lieforge {

struct LeveledLetter {
  int level;
  GenId gen;

  friend auto operator<=>(const LeveledLetter&, const LeveledLetter&) = default;
};

// Sorted descending by (level, gen).
using WordEncoding = std::vector<LeveledLetter>;

class HatOrder {
 public:
  HatOrder() = default;
  explicit HatOrder(std::vector<int> generatorDegrees);
  explicit HatOrder(const Presentation& p);

  int degree(std::span<const GenId> word) const;
  WordEncoding encode(std::span<const GenId> word) const;

  std::strong_ordering compare(std::span<const GenId> a, std::span<const GenId> b) const;
  bool greater(std::span<const GenId> a, std::span<const GenId> b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  // Same-degree comparison on precomputed encodings.
  static std::strong_ordering compareEncoded(const WordEncoding& a, const WordEncoding& b);

 private:
  std::vector<int> degrees_;
};

// Sign of interchanging two homogeneous elements of parities s1 and s2.
constexpr int epsilon(int s1, int s2) { return (s1 & s2 & 1) ? -1 : 1; }

}  // namespace lieforge
