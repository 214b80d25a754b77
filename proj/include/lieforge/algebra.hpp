#pragma once

// User-facing queries on a presented Lie superalgebra. Every query extends
// the computed range on demand, so a LieAlgebra is single-writer: do not call
// it from several threads unless the needed degrees are already computed and
// only const members are used.

#include <array>
#include <cstddef>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "lieforge/engine.hpp"
#include "lieforge/presentation.hpp"

namespace lieforge {

struct DimensionTable {
  std::vector<std::size_t> perDegree;                    // [d-1] = dim L_d
  std::map<std::pair<int, int>, std::size_t> bigraded;   // (degree, homDegree) -> dim
  std::vector<std::array<std::size_t, 2>> parity;        // [d-1] = {even, odd}

  std::size_t operator[](int degree) const { return perDegree.at(degree - 1); }
};

class LieAlgebra {
 public:
  using AnyEngine = std::variant<Engine<RationalField>, Engine<PrimeField>>;

  // Validates the presentation; throws ValidationError when it is invalid.
  explicit LieAlgebra(Presentation p, EngineOptions options = {});

  const Presentation& presentation() const;
  const HatOrder& order() const;
  int computedDegree() const;
  void computeTo(int degree);

  DimensionTable dims(int maxDegree);
  std::vector<LieWord> basisInDegree(int degree);

  Element normalForm(const Element& e);
  Element bracket(const Element& a, const Element& b);
  bool isZero(const Element& e);
  bool equal(const Element& a, const Element& b);

  Element word(const LieWord& w) const;  // 1*[w]

  // Homogeneous weight of a nonzero element; throws DegreeError otherwise.
  Weight weightOf(const Element& e) const;

  template <class Fn>
  decltype(auto) visit(Fn&& fn) {
    return std::visit(std::forward<Fn>(fn), engine_);
  }
  template <class Fn>
  decltype(auto) visit(Fn&& fn) const {
    return std::visit(std::forward<Fn>(fn), engine_);
  }

 private:
  AnyEngine engine_;
};

DimensionTable dims(const Presentation& p, int maxDegree, EngineOptions options = {});

}  // namespace lieforge
