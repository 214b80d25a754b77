#include <gtest/gtest.h>

#include "lieforge/algebra.hpp"
#include "lieforge/oracle.hpp"
#include "support.hpp"

using namespace lieforge;
using namespace lieforge::testing;

class L1 : public ::testing::Test {
 protected:
  Presentation p = loadL1();
  LieAlgebra alg{p};
  Element E(std::initializer_list<std::pair<long, std::string_view>> terms) { return el(p, terms); }
};

TEST_F(L1, Dimensions) {
  auto t = alg.dims(5);
  EXPECT_EQ(t.perDegree, (std::vector<std::size_t>{2, 2, 2, 3, 5}));
  EXPECT_EQ(t[4], 3u);
  EXPECT_EQ(t.parity[0], (std::array<std::size_t, 2>{1, 1}));
  EXPECT_EQ(t.parity[1], (std::array<std::size_t, 2>{1, 1}));  // [c] even, [b,a] odd
  EXPECT_EQ(t.parity[2], (std::array<std::size_t, 2>{1, 1}));  // [b,c] even, [b,b,a] odd
  EXPECT_EQ(t.bigraded.at({3, 0}), 2u);
  EXPECT_EQ(alg.computedDegree(), 5);
}

TEST_F(L1, BasisInHatOrder) {
  EXPECT_EQ(alg.basisInDegree(2), (std::vector<LieWord>{w(p, "c"), w(p, "b,a")}));
  EXPECT_EQ(alg.basisInDegree(3), (std::vector<LieWord>{w(p, "b,c"), w(p, "b,b,a")}));
  EXPECT_THROW(alg.basisInDegree(0), DegreeError);
}

TEST_F(L1, NormalForms) {
  EXPECT_EQ(alg.normalForm(E({{1, "a,b"}})), E({{-1, "b,a"}}));
  EXPECT_TRUE(alg.normalForm(E({{1, "b,b"}})).isZero());
  EXPECT_TRUE(alg.normalForm(E({{1, "a,a"}})).isZero());
  EXPECT_TRUE(alg.normalForm(E({{1, "a,b,a"}})).isZero());
  // forced by the relation [b,[b,a]] - [a,c] = 0
  EXPECT_EQ(alg.normalForm(E({{1, "a,c"}})), E({{1, "b,b,a"}}));
  EXPECT_EQ(alg.normalForm(E({{1, "c,a"}})), E({{-1, "b,b,a"}}));
  EXPECT_EQ(alg.normalForm(E({{1, "c,b"}})), E({{-1, "b,c"}}));
  EXPECT_EQ(alg.normalForm(E({{1, "b,c"}})), E({{1, "b,c"}}));
  // 2 = -1 in F_3, so 2*[a,b] = -2*[b,a] = [b,a]
  EXPECT_EQ(alg.normalForm(E({{2, "a,b"}})), E({{1, "b,a"}}));
  EXPECT_TRUE(alg.normalForm(Element{}).isZero());
}

TEST_F(L1, RelationsVanish) {
  for (const auto& r : p.relations) EXPECT_TRUE(alg.isZero(r));
  EXPECT_TRUE(alg.equal(E({{1, "a,c"}}), E({{1, "b,b,a"}})));
  EXPECT_FALSE(alg.equal(E({{1, "c,a"}}), E({{1, "b,b,a"}})));
}

TEST_F(L1, Brackets) {
  EXPECT_EQ(alg.bracket(alg.word(w(p, "a")), alg.word(w(p, "b"))), E({{-1, "b,a"}}));
  EXPECT_EQ(alg.bracket(alg.word(w(p, "b")), alg.word(w(p, "b,a"))), E({{1, "b,b,a"}}));
  EXPECT_EQ(alg.bracket(alg.word(w(p, "c")), alg.word(w(p, "a"))), E({{-1, "b,b,a"}}));
  // [[b,a],b] = -[b,[b,a]]
  EXPECT_EQ(alg.bracket(alg.word(w(p, "b,a")), alg.word(w(p, "b"))), E({{-1, "b,b,a"}}));
  // [[b,a],[b,a]] with [b,a] odd lands in degree 4
  Element sq = alg.bracket(alg.word(w(p, "b,a")), alg.word(w(p, "b,a")));
  EXPECT_EQ(alg.bracket(alg.word(w(p, "b,a")), E({{-1, "a,b"}})), sq);
  EXPECT_TRUE(alg.bracket(Element{}, alg.word(w(p, "a"))).isZero());
}

TEST_F(L1, WeightOf) {
  EXPECT_EQ(alg.weightOf(E({{1, "b,b,a"}})), (Weight{3, 0, 1}));
  EXPECT_THROW(alg.weightOf(E({{1, "b,a"}, {1, "a"}})), DegreeError);
  EXPECT_THROW(alg.weightOf(Element{}), DegreeError);
}

TEST(LieAlgebra, RejectsInvalidPresentations) {
  Presentation p;
  p.generators = {{"a", 0, 1, 0}, {"b", 1, 1, 0}};
  p.relations.push_back(el(p, {{1, "a,a"}, {1, "a,b"}}));
  EXPECT_THROW(LieAlgebra{p}, ValidationError);
  p.relations.clear();
  p.field.characteristic = 2;
  EXPECT_THROW(LieAlgebra{p}, ValidationError);
}

TEST(LieAlgebra, FreeAlgebraOnTwoEvenGeneratorsMatchesWitt) {
  auto t = dims(readPresentation(dataPath("free2.json")), 10);
  auto witt = wittDims(2, 10);
  ASSERT_EQ(t.perDegree.size(), 10u);
  for (int d = 1; d <= 10; ++d) EXPECT_EQ(t[d], witt[d - 1]) << "degree " << d;
}

TEST(LieAlgebra, ZeroRelationsAreDropped) {
  Presentation p = readPresentation(dataPath("free2.json"));
  p.relations.push_back(Element{});
  LieAlgebra alg(p);
  EXPECT_EQ(alg.dims(4).perDegree, (std::vector<std::size_t>{2, 1, 2, 3}));
}

TEST(LieAlgebra, NoCharThreeAxiomChangesOddCube) {
  Presentation p;
  p.field.characteristic = 3;
  p.generators = {{"x", 1, 1, 0}};
  EXPECT_EQ(dims(p, 3).perDegree, (std::vector<std::size_t>{1, 1, 0}));
  EXPECT_EQ(dims(p, 3, EngineOptions{false}).perDegree, (std::vector<std::size_t>{1, 1, 1}));
}
