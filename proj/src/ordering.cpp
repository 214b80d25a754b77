#include "lieforge/ordering.hpp"

#include <algorithm>

#include "lieforge/errors.hpp"

namespace lieforge {

HatOrder::HatOrder(std::vector<int> generatorDegrees) : degrees_(std::move(generatorDegrees)) {}

HatOrder::HatOrder(const Presentation& p) {
  degrees_.reserve(p.generators.size());
  for (const auto& g : p.generators) degrees_.push_back(g.degree);
}

int HatOrder::degree(std::span<const GenId> word) const {
  int d = 0;
  for (GenId x : word) {
    if (x >= degrees_.size()) throw DegreeError("unknown generator id " + std::to_string(x));
    d += degrees_[x];
  }
  return d;
}

WordEncoding HatOrder::encode(std::span<const GenId> word) const {
  WordEncoding enc(word.size());
  int suffix = 0;
  for (std::size_t i = word.size(); i-- > 0;) {
    GenId x = word[i];
    if (x >= degrees_.size()) throw DegreeError("unknown generator id " + std::to_string(x));
    enc[i] = {suffix + 1, x};
    suffix += degrees_[x];
  }
  // levels already decrease left to right
  return enc;
}

std::strong_ordering HatOrder::compareEncoded(const WordEncoding& a, const WordEncoding& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= a.size()) return std::strong_ordering::greater;
    if (i >= b.size()) return std::strong_ordering::less;
    if (a[i] == b[i]) continue;
    // The larger of the two is the highest variable present in only one word;
    // carrying it makes a word smaller.
    return a[i] > b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering HatOrder::compare(std::span<const GenId> a, std::span<const GenId> b) const {
  int da = degree(a), db = degree(b);
  if (da != db) return da <=> db;
  return compareEncoded(encode(a), encode(b));
}

}  // namespace lieforge
