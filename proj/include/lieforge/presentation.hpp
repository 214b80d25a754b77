#pragma once

// Input data model: generators with (degree, homological degree, parity),
// homogeneous relations and optional generator differentials.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lieforge/coefficients.hpp"

namespace lieforge {

using GenId = std::uint32_t;

// Right-normed bracket: {x1, x2, ..., xm} stands for [x1,[x2,...[x(m-1),xm]...]].
using LieWord = std::vector<GenId>;

struct GeneratorDecl {
  std::string name;
  int sign = 0;  // 0 even, 1 odd
  int degree = 1;
  int homDegree = 0;

  friend bool operator==(const GeneratorDecl&, const GeneratorDecl&) = default;
};

struct Weight {
  int degree = 0;
  int homDegree = 0;
  int sign = 0;

  Weight& operator+=(const Weight& o) {
    degree += o.degree;
    homDegree += o.homDegree;
    sign = (sign + o.sign) % 2;
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend bool operator==(const Weight&, const Weight&) = default;
};

template <class C>
struct Term {
  C coeff;
  LieWord word;

  friend bool operator==(const Term&, const Term&) = default;
};

// A linear combination of right-normed words. Canonical form (as produced
// by canonicalize and every engine query): no zero coefficients, no repeated
// words, terms in descending hat order.
template <class C>
struct LieElement {
  std::vector<Term<C>> terms;

  bool isZero() const { return terms.empty(); }
  friend bool operator==(const LieElement&, const LieElement&) = default;
};

using Element = LieElement<Rational>;

struct Presentation {
  FieldSpec field;
  std::vector<GeneratorDecl> generators;
  std::vector<Element> relations;
  // Generators missing from the map have zero differential.
  std::map<GenId, Element> differentials;

  std::optional<GenId> findGenerator(std::string_view name) const;
  const GeneratorDecl& generator(GenId id) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Componentwise sum of the letter weights; throws DegreeError on an unknown
// generator id or an empty word.
Weight weightOf(const Presentation& p, std::span<const GenId> word);
Weight weightOf(const Presentation& p, const Element& e);  // of the first term

struct Violation {
  std::string message;
  std::optional<std::size_t> relation;
  std::optional<GenId> generator;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validatePresentation(const Presentation& p);

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report)
      : std::runtime_error(report.summary()), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// Sorts terms into descending hat order, merges repeated words and reduces
// coefficients for the presentation's field (dropping zeros).
Element canonicalize(const Presentation& p, Element e);

// Structured-text (JSON) presentation format.
Presentation parsePresentation(std::string_view text);
Presentation readPresentation(const std::filesystem::path& path);
std::string serializePresentation(const Presentation& p);

// Element syntax used by the relations array: [[coeff, ["a","b"]], ...].
Element parseElement(const Presentation& p, std::string_view text);
std::string serializeElement(const Presentation& p, const Element& e);

}  // namespace lieforge
