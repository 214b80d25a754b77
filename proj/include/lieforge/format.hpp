#pragma once

#include <string>
#include <vector>

#include "lieforge/homology.hpp"
#include "lieforge/presentation.hpp"

namespace lieforge {

// [b,b,a]
std::string formatWord(const Presentation& p, const LieWord& w);
// c1*[w1] + c2*[w2] ..., or 0
std::string formatElement(const Presentation& p, const Element& e);
// one line per homological degree, entries separated by single spaces
std::string formatHomology(const HomologyTable& t);

}  // namespace lieforge
