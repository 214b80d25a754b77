#pragma once

// Degree-by-degree construction of a graded module M isomorphic to the Lie
// superalgebra given by a presentation.
//
// For every degree n the engine forms the provisional space of hat elements
//   (x, m)  for generators x and basis elements m with deg x + deg m = n,
//   m_x     for generators x of degree n,
// divides out the relation rows and the linearized antisymmetry rows in two
// passes, and keeps the surviving hat elements as the degree-n basis. Every
// other hat element gets a reduction rule expressing it through that basis.
//
// Module elements of a fixed degree are sparse vectors: over basis indices
// for completed degrees, over hat indices for the degree under construction.
// Anything landing above the current limit is zero.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "lieforge/coefficients.hpp"
#include "lieforge/errors.hpp"
#include "lieforge/linalg.hpp"
#include "lieforge/ordering.hpp"
#include "lieforge/presentation.hpp"

namespace lieforge {

struct EngineOptions {
  // In characteristic 3, add [x,[x,x]] = 0 for odd generators x. The
  // linearized super-Jacobi identity only gives 3[x,[x,x]] = 0 there.
  bool char3Axiom = true;
};

template <class F>
class Engine {
 public:
  using T = typename F::value_type;
  using Vec = SparseVec<T>;
  using FieldElement = LieElement<T>;

  // tail < 0 marks the fresh generator m_x.
  struct Hat {
    GenId gen;
    std::int32_t tail;
    LieWord word;
  };

  struct BasisElement {
    GenId gen;
    std::int32_t tail;  // index in degree (degree - deg gen), or -1 for a leaf
    LieWord word;
    int sign;
    int homDegree;
    std::uint32_t hat;
  };

  Engine(Presentation p, F field, EngineOptions options = {});

  const F& field() const { return field_; }
  const Presentation& presentation() const { return p_; }
  const HatOrder& order() const { return order_; }
  const EngineOptions& options() const { return options_; }

  int computedDegree() const { return computed_; }
  int workingDegree() const { return building_; }
  int generatorDegree(GenId x) const { return gdeg_.at(x); }
  int generatorSign(GenId x) const { return gsign_.at(x); }
  int wordDegree(std::span<const GenId> w) const;
  int wordSign(std::span<const GenId> w) const;

  // Runs every missing degree up to n.
  void extendToDegree(int n);

  // The individual steps of one degree; extendToDegree chains them.
  void beginDegree(int n);
  const std::vector<Hat>& hats(int n) const { return level(n).hats; }
  std::vector<Vec> assembleRowsPhase1();
  std::vector<Vec> assembleRowsPhase2(const Echelon<F>& phase1);
  void finishDegree(const Echelon<F>& combined);

  const std::vector<BasisElement>& basis(int d) const;
  std::size_t dimension(int d) const { return basis(d).size(); }
  // Rules of a completed degree, rhs in basis coordinates.
  std::vector<ReductionRule<F>> rules(int d) const;
  // Reduced value of a hat element of a completed degree.
  const Vec& hatValue(int d, std::uint32_t hat) const;
  std::optional<std::uint32_t> pairHat(int d, GenId x, std::uint32_t tail) const;
  std::optional<std::uint32_t> freshHat(int d, GenId x) const;

  Vec unit(std::uint32_t i) const { return Vec{{i, field_.one()}}; }

  // x.v for v of degree `degree`.
  Vec actGenerator(GenId x, int degree, const Vec& v) const;
  // Free-algebra action of a word through the derivation rule
  // [x,h].v = x.(h.v) - eps(x,h) h.(x.v).
  Vec actWord(std::span<const GenId> g, int degree, const Vec& v) const;
  Vec actElement(const FieldElement& g, int degree, const Vec& v) const;

  // Module coordinates of a word of degree at most the current limit.
  Vec fedOfWord(std::span<const GenId> w) const;
  Vec fed(const FieldElement& e) const;
  // Lie element of a module element of a completed degree.
  FieldElement def(int degree, const Vec& v) const;

  FieldElement toField(const Element& e) const;
  Element fromField(const FieldElement& e) const;

  // Scan for the rule table invariants of every completed degree; returns
  // a description of the first problem found.
  std::optional<std::string> checkRuleTables() const;

 private:
  struct Level {
    std::vector<Hat> hats;
    std::vector<std::vector<std::int32_t>> pairIndex;  // [gen][tail] -> hat
    std::vector<std::int32_t> freshIndex;              // [gen] -> hat
    std::vector<BasisElement> basis;
    std::vector<Vec> hatValue;           // filled when complete
    std::vector<std::int32_t> hatToBasis;  // -1 for rule leads
    bool complete = false;
  };

  const Level& level(int d) const;
  int limit() const { return building_ ? building_ : computed_; }
  void requireWorking() const;

  // Action of a basis element, memoized on basis pairs of completed degrees.
  Vec actBasis(int mDegree, std::uint32_t m, int degree, const Vec& v);
  const Vec& actBasisOnBasis(int mDegree, std::uint32_t m, int degree, std::uint32_t j);

  Presentation p_;
  F field_;
  EngineOptions options_;
  HatOrder order_;
  std::vector<int> gdeg_;
  std::vector<int> gsign_;
  std::vector<FieldElement> relations_;
  std::vector<int> relationDegree_;
  std::vector<Level> levels_;  // index = degree
  int computed_ = 0;
  int building_ = 0;
  std::unordered_map<std::uint64_t, Vec> actMemo_;
};

extern template class Engine<RationalField>;
extern template class Engine<PrimeField>;

// ---------------------------------------------------------------------------

template <class F>
Engine<F>::Engine(Presentation p, F field, EngineOptions options)
    : p_(std::move(p)), field_(std::move(field)), options_(options), order_(p_), levels_(1) {
  for (const auto& g : p_.generators) {
    gdeg_.push_back(g.degree);
    gsign_.push_back(g.sign);
  }
  for (const auto& r : p_.relations) {
    FieldElement fr = toField(r);
    if (fr.isZero()) continue;
    relationDegree_.push_back(wordDegree(fr.terms.front().word));
    relations_.push_back(std::move(fr));
  }
}

template <class F>
int Engine<F>::wordDegree(std::span<const GenId> w) const {
  int d = 0;
  for (GenId x : w) d += gdeg_.at(x);
  return d;
}

template <class F>
int Engine<F>::wordSign(std::span<const GenId> w) const {
  int s = 0;
  for (GenId x : w) s ^= gsign_.at(x);
  return s;
}

template <class F>
const typename Engine<F>::Level& Engine<F>::level(int d) const {
  if (d < 1 || d >= static_cast<int>(levels_.size()))
    throw DegreeError("degree " + std::to_string(d) + " has not been computed");
  return levels_[d];
}

template <class F>
const std::vector<typename Engine<F>::BasisElement>& Engine<F>::basis(int d) const {
  const Level& l = level(d);
  if (!l.complete) throw DegreeError("degree " + std::to_string(d) + " is still under construction");
  return l.basis;
}

template <class F>
const typename Engine<F>::Vec& Engine<F>::hatValue(int d, std::uint32_t hat) const {
  const Level& l = level(d);
  if (!l.complete) throw DegreeError("degree " + std::to_string(d) + " is still under construction");
  return l.hatValue.at(hat);
}

template <class F>
std::optional<std::uint32_t> Engine<F>::pairHat(int d, GenId x, std::uint32_t tail) const {
  const Level& l = level(d);
  if (x >= l.pairIndex.size() || tail >= l.pairIndex[x].size()) return std::nullopt;
  return static_cast<std::uint32_t>(l.pairIndex[x][tail]);
}

template <class F>
std::optional<std::uint32_t> Engine<F>::freshHat(int d, GenId x) const {
  const Level& l = level(d);
  if (x >= l.freshIndex.size() || l.freshIndex[x] < 0) return std::nullopt;
  return static_cast<std::uint32_t>(l.freshIndex[x]);
}

template <class F>
std::vector<ReductionRule<F>> Engine<F>::rules(int d) const {
  const Level& l = level(d);
  if (!l.complete) throw DegreeError("degree " + std::to_string(d) + " is still under construction");
  std::vector<ReductionRule<F>> out;
  for (std::uint32_t h = 0; h < l.hats.size(); ++h)
    if (l.hatToBasis[h] < 0) out.push_back({h, l.hatValue[h]});
  return out;
}

template <class F>
void Engine<F>::requireWorking() const {
  if (!building_) throw std::logic_error("no degree under construction");
}

template <class F>
void Engine<F>::extendToDegree(int n) {
  while (computed_ < n) {
    beginDegree(computed_ + 1);
    auto phase1 = assembleRowsPhase1();
    auto tilde = gaussReduce(field_, std::span<const Vec>(phase1), hats(building_).size());
    auto phase2 = assembleRowsPhase2(tilde);
    // Re-reduce the phase-1 echelon rows together with the new rows so the
    // merged table stays inter-reduced.
    std::vector<Vec> all = std::move(tilde.rows);
    all.insert(all.end(), std::make_move_iterator(phase2.begin()), std::make_move_iterator(phase2.end()));
    auto combined = gaussReduce(field_, std::span<const Vec>(all), hats(building_).size());
    finishDegree(combined);
  }
}

template <class F>
void Engine<F>::beginDegree(int n) {
  if (building_) throw std::logic_error("a degree is already under construction");
  if (n != computed_ + 1) throw DegreeError("degrees must be built in order");

  Level l;
  const std::size_t ngen = gdeg_.size();
  l.pairIndex.assign(ngen, {});
  l.freshIndex.assign(ngen, -1);
  for (GenId x = 0; x < ngen; ++x) {
    int tailDeg = n - gdeg_[x];
    if (tailDeg >= 1) {
      const auto& tails = levels_[tailDeg].basis;
      for (std::uint32_t j = 0; j < tails.size(); ++j) {
        LieWord w;
        w.reserve(tails[j].word.size() + 1);
        w.push_back(x);
        w.insert(w.end(), tails[j].word.begin(), tails[j].word.end());
        l.hats.push_back({x, static_cast<std::int32_t>(j), std::move(w)});
      }
    } else if (tailDeg == 0) {
      l.hats.push_back({x, -1, LieWord{x}});
    }
  }

  std::vector<WordEncoding> enc;
  enc.reserve(l.hats.size());
  for (const auto& h : l.hats) enc.push_back(order_.encode(h.word));
  std::vector<std::uint32_t> perm(l.hats.size());
  for (std::uint32_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    return HatOrder::compareEncoded(enc[a], enc[b]) == std::strong_ordering::greater;
  });
  std::vector<Hat> sorted;
  sorted.reserve(perm.size());
  for (auto i : perm) sorted.push_back(std::move(l.hats[i]));
  l.hats = std::move(sorted);

  for (GenId x = 0; x < ngen; ++x) {
    int tailDeg = n - gdeg_[x];
    if (tailDeg >= 1) l.pairIndex[x].assign(levels_[tailDeg].basis.size(), -1);
  }
  for (std::uint32_t h = 0; h < l.hats.size(); ++h) {
    const Hat& hat = l.hats[h];
    if (hat.tail < 0) l.freshIndex[hat.gen] = static_cast<std::int32_t>(h);
    else l.pairIndex[hat.gen][hat.tail] = static_cast<std::int32_t>(h);
  }

  levels_.push_back(std::move(l));
  building_ = n;
}

template <class F>
std::vector<typename Engine<F>::Vec> Engine<F>::assembleRowsPhase1() {
  requireWorking();
  const int n = building_;
  const std::uint32_t p = field_.characteristic();
  std::vector<Vec> rows;

  // Relations acting on lower basis elements.
  for (std::size_t r = 0; r < relations_.size(); ++r) {
    int tailDeg = n - relationDegree_[r];
    if (tailDeg < 1) continue;
    for (std::uint32_t j = 0; j < levels_[tailDeg].basis.size(); ++j)
      rows.push_back(actElement(relations_[r], tailDeg, unit(j)));
  }

  // Relations of degree n themselves.
  for (std::size_t r = 0; r < relations_.size(); ++r) {
    if (relationDegree_[r] != n) continue;
    Vec row;
    for (const auto& t : relations_[r].terms) row = addScaled(field_, row, t.coeff, fedOfWord(t.word));
    rows.push_back(std::move(row));
  }

  // Antisymmetry of each bracket term g.fed(h) + eps(g,h) h.fed(g).
  for (std::size_t r = 0; r < relations_.size(); ++r) {
    if (relationDegree_[r] != n) continue;
    for (const auto& t : relations_[r].terms) {
      if (t.word.size() < 2) continue;
      std::span<const GenId> w(t.word);
      GenId g = w.front();
      auto h = w.subspan(1);
      Vec a = fedOfWord(w);
      Vec b = actWord(h, gdeg_[g], fedOfWord(w.first(1)));
      T s = field_.fromInteger(epsilon(gsign_[g], wordSign(h)));
      rows.push_back(addScaled(field_, a, s, b));
    }
  }

  // x.m + eps(m,x) def(m).fed(x) for generators of degree divisible by p.
  if (p > 0) {
    for (GenId x = 0; x < gdeg_.size(); ++x) {
      if (gdeg_[x] % static_cast<int>(p) != 0) continue;
      int tailDeg = n - gdeg_[x];
      if (tailDeg < 1) continue;
      Vec fx = fedOfWord(std::span<const GenId>(&x, 1));
      const auto& tails = levels_[tailDeg].basis;
      for (std::uint32_t j = 0; j < tails.size(); ++j) {
        Vec a = actGenerator(x, tailDeg, unit(j));
        Vec b = actBasis(tailDeg, j, gdeg_[x], fx);
        T s = field_.fromInteger(epsilon(tails[j].sign, gsign_[x]));
        rows.push_back(addScaled(field_, a, s, b));
      }
    }
  }

  if (p == 3 && options_.char3Axiom) {
    for (GenId x = 0; x < gdeg_.size(); ++x) {
      if (gsign_[x] != 1 || 3 * gdeg_[x] != n) continue;
      Vec fx = fedOfWord(std::span<const GenId>(&x, 1));
      Vec xx = actGenerator(x, gdeg_[x], fx);
      rows.push_back(actGenerator(x, 2 * gdeg_[x], xx));
    }
  }
  return rows;
}

template <class F>
std::vector<typename Engine<F>::Vec> Engine<F>::assembleRowsPhase2(const Echelon<F>& phase1) {
  requireWorking();
  const int n = building_;
  const Level& l = levels_[n];
  std::vector<Vec> rows;
  for (std::uint32_t h : phase1.survivors(l.hats.size())) {
    const Hat& hat = l.hats[h];
    if (hat.tail < 0) continue;
    const GenId x = hat.gen;
    const int tailDeg = n - gdeg_[x];
    const auto& m = levels_[tailDeg].basis[hat.tail];
    Vec fx = fedOfWord(std::span<const GenId>(&x, 1));
    Vec b = actBasis(tailDeg, static_cast<std::uint32_t>(hat.tail), gdeg_[x], fx);
    T s = field_.fromInteger(epsilon(m.sign, gsign_[x]));
    rows.push_back(addScaled(field_, unit(h), s, b));
  }
  return rows;
}

template <class F>
void Engine<F>::finishDegree(const Echelon<F>& combined) {
  requireWorking();
  const int n = building_;
  Level& l = levels_[n];
  const std::size_t nh = l.hats.size();

  l.hatToBasis.assign(nh, -1);
  for (std::uint32_t h : combined.survivors(nh)) {
    const Hat& hat = l.hats[h];
    BasisElement b{hat.gen, hat.tail, hat.word, 0, 0, h};
    b.sign = wordSign(hat.word);
    for (GenId x : hat.word) b.homDegree += p_.generators[x].homDegree;
    l.hatToBasis[h] = static_cast<std::int32_t>(l.basis.size());
    l.basis.push_back(std::move(b));
  }

  l.hatValue.assign(nh, {});
  for (std::uint32_t h = 0; h < nh; ++h)
    if (l.hatToBasis[h] >= 0) l.hatValue[h] = unit(static_cast<std::uint32_t>(l.hatToBasis[h]));
  for (const auto& rule : combined.rules(field_)) {
    Vec v;
    v.reserve(rule.rhs.size());
    // rhs columns are survivors, which map to increasing basis indices
    for (const auto& [col, c] : rule.rhs) v.emplace_back(static_cast<std::uint32_t>(l.hatToBasis[col]), c);
    l.hatValue[rule.lead] = std::move(v);
  }

  l.complete = true;
  computed_ = n;
  building_ = 0;
}

template <class F>
typename Engine<F>::Vec Engine<F>::actGenerator(GenId x, int degree, const Vec& v) const {
  if (x >= gdeg_.size()) throw DegreeError("unknown generator id " + std::to_string(x));
  const int target = degree + gdeg_[x];
  if (v.empty() || target > limit()) return {};
  const Level& l = levels_[target];
  const auto& idx = l.pairIndex[x];
  Vec raw;
  if (l.complete) {
    for (const auto& [j, c] : v) {
      if (j >= idx.size()) throw DegreeError("not a registered basis element");
      for (const auto& [k, a] : l.hatValue[idx[j]]) raw.emplace_back(k, field_.mul(c, a));
    }
  } else {
    for (const auto& [j, c] : v) {
      if (j >= idx.size()) throw DegreeError("not a registered basis element");
      raw.emplace_back(static_cast<std::uint32_t>(idx[j]), c);
    }
  }
  return combine(field_, std::move(raw));
}

template <class F>
typename Engine<F>::Vec Engine<F>::actWord(std::span<const GenId> g, int degree, const Vec& v) const {
  if (g.empty()) throw DegreeError("empty word");
  if (v.empty() || degree + wordDegree(g) > limit()) return {};
  if (g.size() == 1) return actGenerator(g[0], degree, v);
  const GenId x = g.front();
  const auto h = g.subspan(1);
  const int hdeg = wordDegree(h);
  Vec a = actGenerator(x, degree + hdeg, actWord(h, degree, v));
  Vec b = actWord(h, degree + gdeg_[x], actGenerator(x, degree, v));
  T s = field_.neg(field_.fromInteger(epsilon(gsign_[x], wordSign(h))));
  return addScaled(field_, a, s, b);
}

template <class F>
typename Engine<F>::Vec Engine<F>::actElement(const FieldElement& g, int degree, const Vec& v) const {
  Vec out;
  for (const auto& t : g.terms) out = addScaled(field_, out, t.coeff, actWord(t.word, degree, v));
  return out;
}

template <class F>
typename Engine<F>::Vec Engine<F>::actBasis(int mDegree, std::uint32_t m, int degree, const Vec& v) {
  const int target = mDegree + degree;
  if (v.empty() || target > limit()) return {};
  Vec out;
  if (target <= computed_) {
    for (const auto& [j, c] : v) out = addScaled(field_, out, c, actBasisOnBasis(mDegree, m, degree, j));
    return out;
  }
  // Result lands in the degree under construction: unroll one bracket and
  // memoize everything below it.
  const BasisElement& b = levels_[mDegree].basis[m];
  if (b.tail < 0) return actGenerator(b.gen, degree, v);
  const int tailDeg = mDegree - gdeg_[b.gen];
  const auto tail = static_cast<std::uint32_t>(b.tail);
  Vec a = actGenerator(b.gen, tailDeg + degree, actBasis(tailDeg, tail, degree, v));
  Vec c = actBasis(tailDeg, tail, degree + gdeg_[b.gen], actGenerator(b.gen, degree, v));
  const int tailSign = levels_[tailDeg].basis[tail].sign;
  T s = field_.neg(field_.fromInteger(epsilon(gsign_[b.gen], tailSign)));
  return addScaled(field_, a, s, c);
}

template <class F>
const typename Engine<F>::Vec& Engine<F>::actBasisOnBasis(int mDegree, std::uint32_t m, int degree,
                                                          std::uint32_t j) {
  const std::uint64_t key = (static_cast<std::uint64_t>(mDegree) << 56) |
                            (static_cast<std::uint64_t>(m) << 32) |
                            (static_cast<std::uint64_t>(degree) << 24) | j;
  if (auto it = actMemo_.find(key); it != actMemo_.end()) return it->second;
  const BasisElement& b = levels_[mDegree].basis[m];
  Vec result;
  if (b.tail < 0) {
    result = actGenerator(b.gen, degree, unit(j));
  } else {
    const int tailDeg = mDegree - gdeg_[b.gen];
    const auto tail = static_cast<std::uint32_t>(b.tail);
    Vec a = actGenerator(b.gen, tailDeg + degree, actBasis(tailDeg, tail, degree, unit(j)));
    Vec c = actBasis(tailDeg, tail, degree + gdeg_[b.gen], actGenerator(b.gen, degree, unit(j)));
    const int tailSign = levels_[tailDeg].basis[tail].sign;
    T s = field_.neg(field_.fromInteger(epsilon(gsign_[b.gen], tailSign)));
    result = addScaled(field_, a, s, c);
  }
  return actMemo_.emplace(key, std::move(result)).first->second;
}

template <class F>
typename Engine<F>::Vec Engine<F>::fedOfWord(std::span<const GenId> w) const {
  if (w.empty()) throw DegreeError("empty word");
  const int d = wordDegree(w);
  if (d > limit())
    throw DegreeError("degree " + std::to_string(d) + " is beyond the computed range");
  if (w.size() == 1) {
    const Level& l = levels_[d];
    const auto h = static_cast<std::uint32_t>(l.freshIndex.at(w[0]));
    return l.complete ? l.hatValue[h] : unit(h);
  }
  const auto h = w.subspan(1);
  return actGenerator(w[0], d - gdeg_[w[0]], fedOfWord(h));
}

template <class F>
typename Engine<F>::Vec Engine<F>::fed(const FieldElement& e) const {
  Vec out;
  for (const auto& t : e.terms) out = addScaled(field_, out, t.coeff, fedOfWord(t.word));
  return out;
}

template <class F>
typename Engine<F>::FieldElement Engine<F>::def(int degree, const Vec& v) const {
  const auto& b = basis(degree);
  FieldElement e;
  // basis indices ascend with descending hat order
  for (const auto& [j, c] : v) e.terms.push_back({c, b.at(j).word});
  return e;
}

template <class F>
typename Engine<F>::FieldElement Engine<F>::toField(const Element& e) const {
  FieldElement out;
  for (const auto& t : e.terms) {
    T c = field_.fromRational(t.coeff);
    if (!field_.isZero(c)) out.terms.push_back({c, t.word});
  }
  return out;
}

template <class F>
Element Engine<F>::fromField(const FieldElement& e) const {
  Element out;
  for (const auto& t : e.terms) out.terms.push_back({field_.toRational(t.coeff), t.word});
  return out;
}

template <class F>
std::optional<std::string> Engine<F>::checkRuleTables() const {
  for (int d = 1; d <= computed_; ++d) {
    const Level& l = levels_[d];
    for (std::uint32_t h = 0; h < l.hats.size(); ++h) {
      if (l.hatToBasis[h] >= 0) continue;
      for (const auto& [j, c] : l.hatValue[h]) {
        (void)c;
        const std::uint32_t target = l.basis.at(j).hat;
        if (target <= h)
          return "degree " + std::to_string(d) + ": rule rhs term not smaller than its lead";
        if (l.hatToBasis[target] < 0)
          return "degree " + std::to_string(d) + ": rule rhs term is itself a lead";
      }
    }
  }
  return std::nullopt;
}

}  // namespace lieforge
