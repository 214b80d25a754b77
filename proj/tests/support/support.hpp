#pragma once

// Helpers shared by the unit, property and acceptance suites.

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lieforge/algebra.hpp"
#include "lieforge/ordering.hpp"
#include "lieforge/presentation.hpp"

namespace lieforge::testing {

inline std::string dataPath(std::string_view name) {
  return std::string(LIEFORGE_DATA_DIR) + "/" + std::string(name);
}

inline Presentation loadL1() { return readPresentation(dataPath("l1.json")); }
inline Presentation loadL2() { return readPresentation(dataPath("l2.json")); }

// "b,b,a" -> word
inline LieWord w(const Presentation& p, std::string_view letters) {
  LieWord out;
  std::stringstream ss{std::string(letters)};
  std::string name;
  while (std::getline(ss, name, ',')) out.push_back(p.findGenerator(name).value());
  return out;
}

// Canonical element from (coefficient, "x,y,z") pairs.
inline Element el(const Presentation& p, std::initializer_list<std::pair<long, std::string_view>> terms) {
  Element e;
  for (const auto& [c, letters] : terms) e.terms.push_back({Rational(c), w(p, letters)});
  return canonicalize(p, std::move(e));
}

inline Element wordElement(const LieWord& word) {
  Element e;
  e.terms.push_back({1, word});
  return e;
}

// a + s * b, canonical.
inline Element plus(const Presentation& p, const Element& a, const Element& b, const Rational& s = 1) {
  Element e = a;
  for (const auto& t : b.terms) e.terms.push_back({s * t.coeff, t.word});
  return canonicalize(p, std::move(e));
}

inline Element scaled(const Presentation& p, const Rational& s, const Element& a) {
  return plus(p, Element{}, a, s);
}

// All words (letter sequences) of the given degree.
inline std::vector<LieWord> wordsOfDegree(const Presentation& p, int degree) {
  std::vector<LieWord> out;
  LieWord cur;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (GenId x = 0; x < p.generators.size(); ++x) {
      if (p.generators[x].degree > remaining) continue;
      cur.push_back(x);
      self(self, remaining - p.generators[x].degree);
      cur.pop_back();
    }
  };
  rec(rec, degree);
  return out;
}

inline Rational randomNonzero(std::mt19937_64& rng, int bound = 3) {
  std::uniform_int_distribution<int> d(1, bound);
  std::bernoulli_distribution neg(0.5);
  int v = d(rng);
  return Rational(neg(rng) ? -v : v);
}

// A random homogeneous combination of up to maxTerms distinct words taken
// from `pool`, all sharing one weight.
inline Element randomHomogeneous(std::mt19937_64& rng, const Presentation& p,
                                 const std::vector<LieWord>& pool, int maxTerms) {
  if (pool.empty()) return {};
  std::vector<LieWord> shuffled = pool;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  const Weight target = weightOf(p, shuffled.front());
  Element e;
  for (const auto& word : shuffled) {
    if (static_cast<int>(e.terms.size()) >= maxTerms) break;
    if (weightOf(p, word) == target) e.terms.push_back({randomNonzero(rng), word});
  }
  return canonicalize(p, std::move(e));
}

struct RandomSpec {
  int minGenerators = 2;
  int maxGenerators = 3;
  int maxGeneratorDegree = 2;
  int maxRelations = 2;
  int minRelationDegree = 2;
  int maxRelationDegree = 4;
  int maxTerms = 3;
  std::vector<std::uint32_t> characteristics{0, 3, 5, 7};
};

inline Presentation randomPresentation(std::mt19937_64& rng, const RandomSpec& spec = {}) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  Presentation p;
  p.field.characteristic = spec.characteristics[pick(0, static_cast<int>(spec.characteristics.size()) - 1)];
  const int ngen = pick(spec.minGenerators, spec.maxGenerators);
  for (int i = 0; i < ngen; ++i) {
    GeneratorDecl g;
    g.name = std::string(1, static_cast<char>('a' + i));
    g.sign = pick(0, 1);
    g.degree = i == 0 ? 1 : pick(1, spec.maxGeneratorDegree);
    p.generators.push_back(g);
  }
  const int nrel = pick(0, spec.maxRelations);
  for (int r = 0; r < nrel; ++r) {
    auto pool = wordsOfDegree(p, pick(spec.minRelationDegree, spec.maxRelationDegree));
    Element rel = randomHomogeneous(rng, p, pool, spec.maxTerms);
    if (!rel.isZero()) p.relations.push_back(std::move(rel));
  }
  return p;
}

// A dg presentation whose differential is well defined by construction:
// homological-degree-0 generators (with relations among themselves only)
// and homological-degree-1 generators mapping into the degree-0 part.
inline Presentation randomDgPresentation(std::mt19937_64& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  Presentation p;
  const std::uint32_t chars[] = {0, 5, 7};
  p.field.characteristic = chars[pick(0, 2)];
  const int base = pick(2, 3);
  for (int i = 0; i < base; ++i)
    p.generators.push_back({std::string(1, static_cast<char>('a' + i)), pick(0, 1), i == 0 ? 1 : pick(1, 2), 0});

  const int nrel = pick(0, 1);
  for (int r = 0; r < nrel; ++r) {
    Element rel = randomHomogeneous(rng, p, wordsOfDegree(p, pick(2, 3)), 2);
    if (!rel.isZero()) p.relations.push_back(std::move(rel));
  }

  const int cycles = pick(1, 2);
  for (int i = 0; i < cycles; ++i) {
    GeneratorDecl y{std::string(1, static_cast<char>('x' + i)), pick(0, 1), pick(2, 3), 1};
    std::vector<LieWord> pool;
    for (const auto& word : wordsOfDegree(p, y.degree)) {
      bool onlyBase = std::all_of(word.begin(), word.end(),
                                  [&](GenId g) { return p.generators[g].homDegree == 0; });
      if (onlyBase && weightOf(p, word).sign == (y.sign + 1) % 2) pool.push_back(word);
    }
    const GenId id = static_cast<GenId>(p.generators.size());
    p.generators.push_back(y);
    Element image = randomHomogeneous(rng, p, pool, 2);
    if (!image.isZero()) p.differentials[id] = std::move(image);
  }
  return p;
}

// Same algebra with generators listed in a different order.
inline Presentation permuted(const Presentation& p, const std::vector<GenId>& perm) {
  // perm[old] = new
  Presentation q;
  q.field = p.field;
  q.generators.resize(p.generators.size());
  for (GenId i = 0; i < perm.size(); ++i) q.generators[perm[i]] = p.generators[i];
  auto remap = [&](const Element& e) {
    Element out;
    for (const auto& t : e.terms) {
      LieWord word;
      for (GenId x : t.word) word.push_back(perm[x]);
      out.terms.push_back({t.coeff, word});
    }
    return canonicalize(q, std::move(out));
  };
  for (const auto& r : p.relations) q.relations.push_back(remap(r));
  for (const auto& [x, image] : p.differentials) q.differentials[perm[x]] = remap(image);
  return q;
}

}  // namespace lieforge::testing
