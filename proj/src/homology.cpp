#include "lieforge/homology.hpp"

#include <string>

namespace lieforge {

namespace {

// Differential in module coordinates, memoized per basis element.
template <class F>
class Derivation {
 public:
  using T = typename F::value_type;
  using Vec = SparseVec<T>;

  Derivation(const Engine<F>& engine, HomologyOptions options) : e_(engine), options_(options) {
    const auto& p = e_.presentation();
    images_.resize(p.generators.size());
    for (const auto& [x, image] : p.differentials) images_[x] = e_.toField(image);
  }

  const typename Engine<F>::FieldElement& image(GenId x) const { return images_.at(x); }

  T koszul(GenId x) const {
    if (!options_.koszulSigns) return e_.field().one();
    return e_.field().fromInteger(e_.generatorSign(x) ? -1 : 1);
  }

  // d of basis element i of degree d, in degree-d coordinates
  const Vec& ofBasis(int degree, std::uint32_t i) {
    auto& memo = memo_[degree];
    if (memo.empty()) memo.resize(e_.basis(degree).size());
    if (memo[i]) return *memo[i];
    const auto& b = e_.basis(degree)[i];
    Vec v;
    if (b.tail < 0) {
      v = e_.fed(images_[b.gen]);
    } else {
      const int tailDeg = degree - e_.generatorDegree(b.gen);
      const auto tail = static_cast<std::uint32_t>(b.tail);
      Vec a = e_.actElement(images_[b.gen], tailDeg, e_.unit(tail));
      Vec c = e_.actGenerator(b.gen, tailDeg, ofBasis(tailDeg, tail));
      v = addScaled(e_.field(), a, koszul(b.gen), c);
    }
    memo[i] = std::move(v);
    return *memo[i];
  }

  Vec ofVector(int degree, const Vec& v) {
    Vec out;
    for (const auto& [i, c] : v) out = addScaled(e_.field(), out, c, ofBasis(degree, i));
    return out;
  }

  // d of an arbitrary word, by the same recursion on its letters.
  Vec ofWord(std::span<const GenId> w) {
    const GenId x = w.front();
    if (w.size() == 1) return e_.fed(images_[x]);
    const auto h = w.subspan(1);
    const int hdeg = e_.wordDegree(h);
    Vec a = e_.actElement(images_[x], hdeg, e_.fedOfWord(h));
    Vec c = e_.actGenerator(x, hdeg, ofWord(h));
    return addScaled(e_.field(), a, koszul(x), c);
  }

  Vec ofElement(const typename Engine<F>::FieldElement& el) {
    Vec out;
    for (const auto& t : el.terms) out = addScaled(e_.field(), out, t.coeff, ofWord(t.word));
    return out;
  }

  // Rows: images of the basis elements of bidegree (d, h).
  std::vector<Vec> matrix(int degree, int homDegree) {
    std::vector<Vec> rows;
    const auto& b = e_.basis(degree);
    for (std::uint32_t i = 0; i < b.size(); ++i)
      if (b[i].homDegree == homDegree) rows.push_back(ofBasis(degree, i));
    return rows;
  }

  std::size_t rank(int degree, int homDegree) {
    auto rows = matrix(degree, homDegree);
    return gaussReduce(e_.field(), std::span<const Vec>(rows), e_.basis(degree).size()).rank();
  }

 private:
  const Engine<F>& e_;
  HomologyOptions options_;
  std::vector<typename Engine<F>::FieldElement> images_;
  std::map<int, std::vector<std::optional<Vec>>> memo_;
};

int maxHomDegree(const LieAlgebra& alg, int degree) {
  return alg.visit([&](const auto& e) {
    int h = 0;
    for (const auto& b : e.basis(degree)) h = std::max(h, b.homDegree);
    return h;
  });
}

}  // namespace

Element differential(LieAlgebra& alg, const Element& in, HomologyOptions options) {
  Element e = canonicalize(alg.presentation(), in);
  if (e.isZero()) return e;
  const int d = alg.weightOf(e).degree;
  alg.computeTo(d);
  return alg.visit([&](const auto& eng) {
    using F = std::decay_t<decltype(eng.field())>;
    Derivation<F> der(eng, options);
    return eng.fromField(eng.def(d, der.ofElement(eng.toField(e))));
  });
}

Element differentialOfWord(LieAlgebra& alg, const LieWord& w, HomologyOptions options) {
  return differential(alg, alg.word(w), options);
}

ValidationReport checkDifferential(LieAlgebra& alg, int maxDegree, HomologyOptions options) {
  ValidationReport report = validatePresentation(alg.presentation());
  if (!report.ok()) return report;
  alg.computeTo(maxDegree);
  const Presentation& p = alg.presentation();
  alg.visit([&](const auto& eng) {
    using F = std::decay_t<decltype(eng.field())>;
    Derivation<F> der(eng, options);
    for (std::size_t r = 0; r < p.relations.size(); ++r) {
      const auto rel = eng.toField(p.relations[r]);
      if (rel.isZero() || eng.wordDegree(rel.terms.front().word) > maxDegree) continue;
      if (!der.ofElement(rel).empty())
        report.violations.push_back({"differential of the relation is not zero", r, std::nullopt});
    }
    for (GenId x = 0; x < p.generators.size(); ++x) {
      const int d = eng.generatorDegree(x);
      if (d > maxDegree) continue;
      const auto& image = der.image(x);
      if (!image.isZero() && p.generators[x].homDegree < 1)
        report.violations.push_back(
            {"generator '" + p.generators[x].name + "' of homological degree 0 has a nonzero differential",
             std::nullopt, x});
      if (!der.ofVector(d, eng.fed(image)).empty())
        report.violations.push_back(
            {"d(d(" + p.generators[x].name + ")) is not zero", std::nullopt, x});
    }
  });
  return report;
}

ValidationReport checkSquareZero(LieAlgebra& alg, int maxDegree, HomologyOptions options) {
  ValidationReport report;
  alg.computeTo(maxDegree);
  alg.visit([&](const auto& eng) {
    using F = std::decay_t<decltype(eng.field())>;
    Derivation<F> der(eng, options);
    for (int d = 1; d <= maxDegree; ++d) {
      const auto& b = eng.basis(d);
      for (std::uint32_t i = 0; i < b.size(); ++i) {
        if (!der.ofVector(d, der.ofBasis(d, i)).empty())
          report.violations.push_back({"d^2 is not zero on basis element " + std::to_string(i) +
                                           " of degree " + std::to_string(d),
                                       std::nullopt, std::nullopt});
      }
    }
  });
  return report;
}

std::size_t differentialRank(LieAlgebra& alg, int degree, int homDegree, HomologyOptions options) {
  alg.computeTo(degree);
  return alg.visit([&](const auto& eng) {
    using F = std::decay_t<decltype(eng.field())>;
    Derivation<F> der(eng, options);
    return der.rank(degree, homDegree);
  });
}

HomologyTable homologyTable(LieAlgebra& alg, int maxDegree, HomologyOptions options) {
  if (maxDegree < 1) throw DegreeError("maximal degree must be at least 1");
  auto report = checkDifferential(alg, maxDegree, options);
  if (!report.ok()) throw ValidationError(std::move(report));

  HomologyTable table;
  table.maxDegree = maxDegree;
  table.rows.assign(maxDegree, std::vector<std::size_t>(maxDegree, 0));
  DimensionTable dims = alg.dims(maxDegree);
  alg.visit([&](const auto& eng) {
    using F = std::decay_t<decltype(eng.field())>;
    Derivation<F> der(eng, options);
    for (int d = 1; d <= maxDegree; ++d) {
      const int top = maxHomDegree(alg, d);
      std::vector<std::size_t> rank(top + 2, 0);
      for (int h = 1; h <= top; ++h) rank[h] = der.rank(d, h);
      for (int h = 0; h <= top; ++h) {
        auto it = dims.bigraded.find({d, h});
        const std::size_t dim = it == dims.bigraded.end() ? 0 : it->second;
        const std::size_t value = dim - rank[h] - rank[h + 1];
        if (value) table.all[{d, h}] = value;
        if (h < maxDegree) table.rows[h][d - 1] = value;
      }
    }
  });
  return table;
}

}  // namespace lieforge
