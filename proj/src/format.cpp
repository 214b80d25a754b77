#include "lieforge/format.hpp"

#include <sstream>

namespace lieforge {

std::string formatWord(const Presentation& p, const LieWord& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += p.generator(w[i]).name;
  }
  return s + "]";
}

std::string formatElement(const Presentation& p, const Element& e) {
  if (e.isZero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    if (i) s += " + ";
    s += toString(e.terms[i].coeff) + "*" + formatWord(p, e.terms[i].word);
  }
  return s;
}

std::string formatHomology(const HomologyTable& t) {
  std::ostringstream os;
  for (const auto& row : t.rows) {
    for (std::size_t d = 0; d < row.size(); ++d) os << (d ? " " : "") << row[d];
    os << '\n';
  }
  return os.str();
}

}  // namespace lieforge
