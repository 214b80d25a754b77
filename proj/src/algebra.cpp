#include "lieforge/algebra.hpp"

namespace lieforge {

namespace {

LieAlgebra::AnyEngine makeEngine(Presentation p, EngineOptions options) {
  auto report = validatePresentation(p);
  if (!report.ok()) throw ValidationError(std::move(report));
  std::erase_if(p.relations, [](const Element& r) { return r.isZero(); });
  return std::visit(
      [&](auto&& field) -> LieAlgebra::AnyEngine {
        using F = std::decay_t<decltype(field)>;
        return Engine<F>(std::move(p), field, options);
      },
      makeField(p.field));
}

}  // namespace

LieAlgebra::LieAlgebra(Presentation p, EngineOptions options)
    : engine_(makeEngine(std::move(p), options)) {}

const Presentation& LieAlgebra::presentation() const {
  return visit([](const auto& e) -> const Presentation& { return e.presentation(); });
}

const HatOrder& LieAlgebra::order() const {
  return visit([](const auto& e) -> const HatOrder& { return e.order(); });
}

int LieAlgebra::computedDegree() const {
  return visit([](const auto& e) { return e.computedDegree(); });
}

void LieAlgebra::computeTo(int degree) {
  visit([&](auto& e) { e.extendToDegree(degree); });
}

Weight LieAlgebra::weightOf(const Element& e) const {
  if (e.isZero()) throw DegreeError("zero element has no weight");
  const Presentation& p = presentation();
  Weight w = lieforge::weightOf(p, e.terms.front().word);
  for (const auto& t : e.terms)
    if (!(lieforge::weightOf(p, t.word) == w)) throw DegreeError("inhomogeneous element");
  return w;
}

DimensionTable LieAlgebra::dims(int maxDegree) {
  if (maxDegree < 1) throw DegreeError("maximal degree must be at least 1");
  computeTo(maxDegree);
  return visit([&](const auto& e) {
    DimensionTable t;
    for (int d = 1; d <= maxDegree; ++d) {
      const auto& b = e.basis(d);
      t.perDegree.push_back(b.size());
      std::array<std::size_t, 2> par{0, 0};
      for (const auto& m : b) {
        ++t.bigraded[{d, m.homDegree}];
        ++par[m.sign];
      }
      t.parity.push_back(par);
    }
    return t;
  });
}

std::vector<LieWord> LieAlgebra::basisInDegree(int degree) {
  if (degree < 1) throw DegreeError("degree must be at least 1");
  computeTo(degree);
  return visit([&](const auto& e) {
    std::vector<LieWord> out;
    for (const auto& m : e.basis(degree)) out.push_back(m.word);
    return out;
  });
}

Element LieAlgebra::normalForm(const Element& in) {
  Element e = canonicalize(presentation(), in);
  if (e.isZero()) return e;
  const int d = weightOf(e).degree;
  computeTo(d);
  return visit([&](const auto& eng) { return eng.fromField(eng.def(d, eng.fed(eng.toField(e)))); });
}

Element LieAlgebra::bracket(const Element& a0, const Element& b0) {
  Element a = canonicalize(presentation(), a0);
  Element b = canonicalize(presentation(), b0);
  if (a.isZero() || b.isZero()) return {};
  const int da = weightOf(a).degree;
  const int db = weightOf(b).degree;
  computeTo(da + db);
  return visit([&](const auto& eng) {
    auto fb = eng.fed(eng.toField(b));
    return eng.fromField(eng.def(da + db, eng.actElement(eng.toField(a), db, fb)));
  });
}

bool LieAlgebra::isZero(const Element& e) { return normalForm(e).isZero(); }

bool LieAlgebra::equal(const Element& a, const Element& b) {
  Element diff = a;
  for (const auto& t : b.terms) diff.terms.push_back({-t.coeff, t.word});
  return isZero(diff);
}

Element LieAlgebra::word(const LieWord& w) const {
  Element e;
  e.terms.push_back({1, w});
  return e;
}

DimensionTable dims(const Presentation& p, int maxDegree, EngineOptions options) {
  LieAlgebra alg(p, options);
  return alg.dims(maxDegree);
}

}  // namespace lieforge
