#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "lieforge/engine.hpp"
#include "support.hpp"

using namespace lieforge;
using namespace lieforge::testing;

namespace {

using RuleTable = std::map<LieWord, std::map<LieWord, Rational>>;

template <class F>
RuleTable rulesByWord(const Engine<F>& e, int n, const Echelon<F>& ech) {
  RuleTable out;
  const auto& hats = e.hats(n);
  for (const auto& r : ech.rules(e.field())) {
    auto& rhs = out[hats[r.lead].word];
    for (const auto& [col, c] : r.rhs) rhs[hats[col].word] = e.field().toRational(c);
  }
  return out;
}

template <class F>
std::set<LieWord> survivorWords(const Engine<F>& e, int n, const Echelon<F>& ech) {
  std::set<LieWord> out;
  for (auto h : ech.survivors(e.hats(n).size())) out.insert(e.hats(n)[h].word);
  return out;
}

template <class F>
std::vector<LieWord> basisWords(const Engine<F>& e, int d) {
  std::vector<LieWord> out;
  for (const auto& b : e.basis(d)) out.push_back(b.word);
  return out;
}

Presentation single(int sign, std::uint32_t characteristic) {
  Presentation p;
  p.field.characteristic = characteristic;
  p.generators.push_back({"x", sign, 1, 0});
  return p;
}

}  // namespace

TEST(EngineL1, DegreeOneAndTwo) {
  Presentation p = loadL1();
  Engine<PrimeField> e(p, PrimeField(3));
  e.extendToDegree(2);
  EXPECT_EQ(basisWords(e, 1), (std::vector<LieWord>{w(p, "a"), w(p, "b")}));
  EXPECT_EQ(basisWords(e, 2), (std::vector<LieWord>{w(p, "c"), w(p, "b,a")}));

  RuleTable rules;
  for (const auto& r : e.rules(2)) {
    auto& rhs = rules[e.hats(2)[r.lead].word];
    for (const auto& [j, c] : r.rhs) rhs[e.basis(2)[j].word] = e.field().toRational(c);
  }
  RuleTable expected = {
      {w(p, "a,a"), {}},
      {w(p, "a,b"), {{w(p, "b,a"), -1}}},
      {w(p, "b,b"), {}},
  };
  EXPECT_EQ(rules, expected);
}

TEST(EngineL1, DegreeThreeStepByStep) {
  Presentation p = loadL1();
  Engine<PrimeField> e(p, PrimeField(3));
  e.extendToDegree(2);
  e.beginDegree(3);

  std::vector<LieWord> hatWords;
  for (const auto& h : e.hats(3)) hatWords.push_back(h.word);
  EXPECT_EQ(hatWords, (std::vector<LieWord>{w(p, "c,a"), w(p, "c,b"), w(p, "a,c"), w(p, "a,b,a"),
                                            w(p, "b,c"), w(p, "b,b,a")}));

  auto phase1 = e.assembleRowsPhase1();
  auto tilde = gaussReduce(e.field(), std::span<const Engine<PrimeField>::Vec>(phase1), e.hats(3).size());
  EXPECT_EQ(survivorWords(e, 3, tilde), (std::set<LieWord>{w(p, "c,b"), w(p, "b,b,a"), w(p, "b,c")}));
  RuleTable expected1 = {
      {w(p, "a,b,a"), {}},
      {w(p, "a,c"), {{w(p, "b,b,a"), 1}}},
      {w(p, "c,a"), {{w(p, "b,b,a"), -1}}},
  };
  EXPECT_EQ(rulesByWord(e, 3, tilde), expected1);

  auto phase2 = e.assembleRowsPhase2(tilde);
  std::vector<Engine<PrimeField>::Vec> all = tilde.rows;
  all.insert(all.end(), phase2.begin(), phase2.end());
  auto combined = gaussReduce(e.field(), std::span<const Engine<PrimeField>::Vec>(all), e.hats(3).size());
  RuleTable expected2 = expected1;
  expected2[w(p, "c,b")] = {{w(p, "b,c"), -1}};
  EXPECT_EQ(rulesByWord(e, 3, combined), expected2);

  e.finishDegree(combined);
  EXPECT_EQ(basisWords(e, 3), (std::vector<LieWord>{w(p, "b,c"), w(p, "b,b,a")}));
  EXPECT_FALSE(e.checkRuleTables().has_value());
}

TEST(EngineL1, DimensionsThroughSix) {
  Engine<PrimeField> e(loadL1(), PrimeField(3));
  e.extendToDegree(6);
  std::vector<std::size_t> dims;
  for (int d = 1; d <= 6; ++d) dims.push_back(e.dimension(d));
  EXPECT_EQ(dims[0], 2u);
  EXPECT_EQ(dims[1], 2u);
  EXPECT_EQ(dims[2], 2u);
  EXPECT_EQ(dims[3], 3u);
  EXPECT_EQ(dims[4], 5u);
  EXPECT_FALSE(e.checkRuleTables().has_value());
}

TEST(EngineSmall, OneEvenGenerator) {
  Engine<RationalField> e(single(0, 0), RationalField{});
  e.extendToDegree(4);
  EXPECT_EQ(e.dimension(1), 1u);
  for (int d = 2; d <= 4; ++d) EXPECT_EQ(e.dimension(d), 0u);
  auto rules = e.rules(2);
  ASSERT_EQ(rules.size(), 1u);
  EXPECT_TRUE(rules[0].rhs.empty());
}

TEST(EngineSmall, OneOddGeneratorCharZero) {
  Engine<RationalField> e(single(1, 0), RationalField{});
  e.extendToDegree(4);
  EXPECT_EQ(e.dimension(1), 1u);
  EXPECT_EQ(e.dimension(2), 1u);
  EXPECT_EQ(e.dimension(3), 0u);
  EXPECT_EQ(e.dimension(4), 0u);
}

TEST(EngineSmall, OneOddGeneratorCharThreeNeedsTheExtraAxiom) {
  Engine<PrimeField> with(single(1, 3), PrimeField(3));
  with.extendToDegree(3);
  EXPECT_EQ(with.dimension(2), 1u);
  EXPECT_EQ(with.dimension(3), 0u);

  Engine<PrimeField> without(single(1, 3), PrimeField(3), EngineOptions{false});
  without.extendToDegree(3);
  EXPECT_EQ(without.dimension(2), 1u);
  EXPECT_EQ(without.dimension(3), 1u);
}

TEST(EngineSmall, LinearTermEliminatesGenerator) {
  // z - [a,b] with deg z = 2 gives back the free algebra on a, b
  Presentation p;
  p.generators = {{"a", 0, 1, 0}, {"b", 0, 1, 0}, {"z", 0, 2, 0}};
  p.relations.push_back(el(p, {{1, "z"}, {-1, "a,b"}}));
  Engine<RationalField> e(p, RationalField{});
  e.extendToDegree(6);
  const std::vector<std::size_t> free2 = {2, 1, 2, 3, 6, 9};
  for (int d = 1; d <= 6; ++d) EXPECT_EQ(e.dimension(d), free2[d - 1]) << "degree " << d;
  EXPECT_FALSE(e.checkRuleTables().has_value());

  Presentation q;
  q.generators = {{"a", 0, 1, 0}, {"b", 0, 1, 0}};
  q.relations.push_back(el(q, {{1, "a"}}));
  Engine<RationalField> e2(q, RationalField{});
  e2.extendToDegree(3);
  EXPECT_EQ(e2.dimension(1), 1u);
  EXPECT_EQ(e2.dimension(2), 0u);
  EXPECT_EQ(e2.dimension(3), 0u);
}

TEST(EngineErrors, QueriesOutsideTheComputedRange) {
  Engine<PrimeField> e(loadL1(), PrimeField(3));
  e.extendToDegree(2);
  EXPECT_THROW(e.basis(3), DegreeError);
  EXPECT_THROW(e.basis(0), DegreeError);
  EXPECT_THROW(e.beginDegree(4), DegreeError);
  EXPECT_THROW(e.fedOfWord(w(e.presentation(), "b,b,a")), DegreeError);
  e.beginDegree(3);
  EXPECT_THROW(e.beginDegree(3), std::logic_error);
  EXPECT_THROW(e.basis(3), DegreeError);
}

TEST(EngineInvariants, RuleTablesOnRandomPresentations) {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 150; ++i) {
    Presentation p = randomPresentation(rng);
    auto check = [&](auto& engine) {
      engine.extendToDegree(6);
      auto problem = engine.checkRuleTables();
      EXPECT_FALSE(problem.has_value()) << *problem << "\n" << serializePresentation(p);
      for (int d = 1; d <= 6; ++d) {
        const auto& b = engine.basis(d);
        for (std::size_t j = 1; j < b.size(); ++j)
          EXPECT_TRUE(engine.order().greater(b[j - 1].word, b[j].word));
      }
    };
    if (p.field.characteristic == 0) {
      Engine<RationalField> e(p, RationalField{});
      check(e);
    } else {
      Engine<PrimeField> e(p, PrimeField(p.field.characteristic));
      check(e);
    }
  }
}

TEST(EngineInvariants, FedOfBasisWordIsItsUnitVector) {
  std::mt19937_64 rng(515);
  for (int i = 0; i < 100; ++i) {
    Presentation p = randomPresentation(rng);
    if (p.field.characteristic != 0) continue;
    Engine<RationalField> e(p, RationalField{});
    e.extendToDegree(5);
    for (int d = 1; d <= 5; ++d)
      for (std::uint32_t j = 0; j < e.dimension(d); ++j)
        ASSERT_EQ(e.fedOfWord(e.basis(d)[j].word), e.unit(j));
  }
}
