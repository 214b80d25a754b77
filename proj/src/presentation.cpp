#include "lieforge/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lieforge/errors.hpp"
#include "lieforge/ordering.hpp"

namespace lieforge {

std::optional<GenId> Presentation::findGenerator(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == name) return static_cast<GenId>(i);
  return std::nullopt;
}

const GeneratorDecl& Presentation::generator(GenId id) const {
  if (id >= generators.size()) throw DegreeError("unknown generator id " + std::to_string(id));
  return generators[id];
}

Weight weightOf(const Presentation& p, std::span<const GenId> word) {
  if (word.empty()) throw DegreeError("empty word");
  Weight w;
  for (GenId x : word) {
    const auto& g = p.generator(x);
    w += Weight{g.degree, g.homDegree, g.sign};
  }
  return w;
}

Weight weightOf(const Presentation& p, const Element& e) {
  if (e.isZero()) throw DegreeError("zero element has no weight");
  return weightOf(p, e.terms.front().word);
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    const auto& v = violations[i];
    if (v.relation) os << "relation " << *v.relation << ": ";
    os << v.message;
  }
  return os.str();
}

namespace {

bool wordIsDeclared(const Presentation& p, const LieWord& w) {
  return !w.empty() &&
         std::all_of(w.begin(), w.end(), [&](GenId x) { return x < p.generators.size(); });
}

// Reports inhomogeneity of e; returns the common weight when e is nonzero and
// homogeneous.
std::optional<Weight> checkHomogeneous(const Presentation& p, const Element& e,
                                       std::vector<std::string>& problems) {
  std::optional<Weight> first;
  for (const auto& t : e.terms) {
    if (!wordIsDeclared(p, t.word)) {
      problems.push_back("term with an empty word or undeclared generator");
      return std::nullopt;
    }
    Weight w = weightOf(p, t.word);
    if (!first) {
      first = w;
      continue;
    }
    if (w.degree != first->degree) problems.push_back("degree-inhomogeneous");
    else if (w.homDegree != first->homDegree) problems.push_back("homological-degree-inhomogeneous");
    else if (w.sign != first->sign) problems.push_back("sign-inhomogeneous");
    else continue;
    return std::nullopt;
  }
  return first;
}

}  // namespace

ValidationReport validatePresentation(const Presentation& p) {
  ValidationReport report;
  auto add = [&](std::string msg, std::optional<std::size_t> rel = std::nullopt,
                 std::optional<GenId> gen = std::nullopt) {
    report.violations.push_back({std::move(msg), rel, gen});
  };

  try {
    makeField(p.field);
  } catch (const FieldError& e) {
    add(e.what());
  }

  std::set<std::string> names;
  for (GenId i = 0; i < p.generators.size(); ++i) {
    const auto& g = p.generators[i];
    if (g.name.empty()) add("generator " + std::to_string(i) + " has an empty name", {}, i);
    if (!names.insert(g.name).second) add("duplicate generator name '" + g.name + "'", {}, i);
    if (g.sign != 0 && g.sign != 1) add("generator '" + g.name + "' has sign outside {0,1}", {}, i);
    if (g.degree < 1) add("generator '" + g.name + "' has degree < 1", {}, i);
    if (g.homDegree < 0) add("generator '" + g.name + "' has negative homological degree", {}, i);
  }
  if (!report.ok()) return report;

  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    std::vector<std::string> problems;
    checkHomogeneous(p, p.relations[r], problems);
    for (auto& m : problems) add("invalid: " + m, r);
  }

  for (const auto& [x, image] : p.differentials) {
    if (x >= p.generators.size()) {
      add("differential declared for unknown generator id " + std::to_string(x));
      continue;
    }
    const auto& g = p.generators[x];
    std::vector<std::string> problems;
    auto w = checkHomogeneous(p, image, problems);
    for (auto& m : problems) add("differential of '" + g.name + "': " + m, {}, x);
    if (!w) continue;
    if (w->degree != g.degree)
      add("differential of '" + g.name + "' changes the degree", {}, x);
    if (w->homDegree != g.homDegree - 1)
      add("differential of '" + g.name + "' does not lower the homological degree by one", {}, x);
    if (w->sign != (g.sign + 1) % 2)
      add("differential of '" + g.name + "' does not flip the parity", {}, x);
  }
  return report;
}

Element canonicalize(const Presentation& p, Element e) {
  HatOrder order(p);
  std::vector<std::pair<WordEncoding, std::size_t>> keyed;
  keyed.reserve(e.terms.size());
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    if (e.terms[i].word.empty()) throw DegreeError("empty word in element");
    keyed.emplace_back(order.encode(e.terms[i].word), i);
  }
  // Descending: higher degree first, then larger hat order.
  std::vector<int> degs(e.terms.size());
  for (std::size_t i = 0; i < e.terms.size(); ++i) degs[i] = order.degree(e.terms[i].word);
  std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
    if (degs[a.second] != degs[b.second]) return degs[a.second] > degs[b.second];
    return HatOrder::compareEncoded(a.first, b.first) == std::strong_ordering::greater;
  });

  Element out;
  for (const auto& [enc, i] : keyed) {
    auto& t = e.terms[i];
    if (!out.terms.empty() && out.terms.back().word == t.word) {
      out.terms.back().coeff += t.coeff;
    } else {
      out.terms.push_back({t.coeff, std::move(t.word)});
    }
  }
  std::vector<Term<Rational>> kept;
  for (auto& t : out.terms) {
    Rational c = reduceCoefficient(p.field, t.coeff);
    if (sgn(c) != 0) kept.push_back({std::move(c), std::move(t.word)});
  }
  out.terms = std::move(kept);
  return out;
}

}  // namespace lieforge
