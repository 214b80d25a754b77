#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "lieforge/errors.hpp"
#include "lieforge/presentation.hpp"

namespace lieforge {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::pair<std::size_t, std::size_t> lineColumn(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parseJson(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points one past the offending character
    auto [line, col] = lineColumn(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("syntax error at line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ": " + e.what(),
                     line, col);
  }
}

int intField(const json& obj, const char* key, int fallback, const std::string& where) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ParseError(where + "." + key + " must be an integer");
  auto n = v.get<std::int64_t>();
  if (n < -(1 << 30) || n > (1 << 30)) throw ParseError(where + "." + key + " out of range");
  return static_cast<int>(n);
}

Rational parseCoefficient(const json& v, const FieldSpec& field, const std::string& where) {
  Rational q;
  if (v.is_number_integer()) {
    q = Rational(v.dump(), 10);
  } else if (v.is_string()) {
    static const std::regex literal(R"(\s*([+-]?\d+)(\s*/\s*(\d+))?\s*)");
    std::smatch m;
    std::string s = v.get<std::string>();
    if (!std::regex_match(s, m, literal)) throw ParseError(where + ": bad rational literal '" + s + "'");
    mpz_class num(m[1].str(), 10);
    mpz_class den = m[3].matched ? mpz_class(m[3].str(), 10) : mpz_class(1);
    if (den == 0) throw ParseError(where + ": zero denominator in '" + s + "'");
    q = Rational(num, den);
    q.canonicalize();
  } else {
    throw ParseError(where + ": coefficient must be an integer or a rational literal string");
  }
  try {
    return reduceCoefficient(field, q);
  } catch (const FieldError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

Element elementFromJson(const Presentation& p, const json& arr, const std::string& where) {
  if (!arr.is_array()) throw ParseError(where + " must be an array of [coefficient, word] terms");
  Element e;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const json& term = arr[i];
    if (!term.is_array() || term.size() != 2 || !term[1].is_array())
      throw ParseError(at + " must be [coefficient, [letters...]]");
    Rational c = parseCoefficient(term[0], p.field, at);
    LieWord w;
    for (const json& letter : term[1]) {
      if (!letter.is_string()) throw ParseError(at + ": letters must be generator names");
      auto id = p.findGenerator(letter.get<std::string>());
      if (!id) throw ParseError(at + ": undeclared generator '" + letter.get<std::string>() + "'");
      w.push_back(*id);
    }
    if (w.empty()) throw ParseError(at + ": empty word");
    e.terms.push_back({std::move(c), std::move(w)});
  }
  return canonicalize(p, std::move(e));
}

ordered_json coefficientToJson(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

ordered_json elementToJson(const Presentation& p, const Element& e) {
  ordered_json arr = ordered_json::array();
  for (const auto& t : e.terms) {
    ordered_json word = ordered_json::array();
    for (GenId x : t.word) word.push_back(p.generator(x).name);
    arr.push_back(ordered_json::array({coefficientToJson(t.coeff), word}));
  }
  return arr;
}

}  // namespace

Presentation parsePresentation(std::string_view text) {
  json doc = parseJson(text);
  if (!doc.is_object()) throw ParseError("top level must be an object");

  Presentation p;
  if (doc.contains("field")) {
    const json& f = doc["field"];
    if (!f.is_object()) throw ParseError("field must be an object");
    int ch = intField(f, "char", 0, "field");
    if (ch < 0) throw ParseError("field.char must be nonnegative");
    p.field.characteristic = static_cast<std::uint32_t>(ch);
    try {
      makeField(p.field);
    } catch (const FieldError& e) {
      throw ParseError(std::string("field: ") + e.what());
    }
  }

  if (!doc.contains("generators") || !doc["generators"].is_array())
    throw ParseError("generators must be an array");
  const json& gens = doc["generators"];
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string at = "generators[" + std::to_string(i) + "]";
    const json& g = gens[i];
    if (!g.is_object() || !g.contains("name") || !g["name"].is_string())
      throw ParseError(at + " must be an object with a string name");
    GeneratorDecl decl;
    decl.name = g["name"].get<std::string>();
    decl.sign = intField(g, "sign", 0, at);
    decl.degree = intField(g, "degree", 1, at);
    decl.homDegree = intField(g, "homDegree", 0, at);
    if (p.findGenerator(decl.name)) throw ParseError(at + ": duplicate generator name '" + decl.name + "'");
    p.generators.push_back(std::move(decl));
  }

  if (doc.contains("relations")) {
    const json& rels = doc["relations"];
    if (!rels.is_array()) throw ParseError("relations must be an array");
    for (std::size_t i = 0; i < rels.size(); ++i)
      p.relations.push_back(elementFromJson(p, rels[i], "relations[" + std::to_string(i) + "]"));
  }

  if (doc.contains("differentials")) {
    const json& diffs = doc["differentials"];
    if (!diffs.is_object()) throw ParseError("differentials must be an object");
    for (const auto& [name, image] : diffs.items()) {
      auto id = p.findGenerator(name);
      if (!id) throw ParseError("differentials: undeclared generator '" + name + "'");
      p.differentials[*id] = elementFromJson(p, image, "differentials." + name);
    }
  }
  return p;
}

Presentation readPresentation(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parsePresentation(buf.str());
}

std::string serializePresentation(const Presentation& p) {
  ordered_json doc;
  doc["field"] = {{"char", p.field.characteristic}};
  ordered_json gens = ordered_json::array();
  for (const auto& g : p.generators) {
    ordered_json o;
    o["name"] = g.name;
    o["sign"] = g.sign;
    o["degree"] = g.degree;
    o["homDegree"] = g.homDegree;
    gens.push_back(std::move(o));
  }
  doc["generators"] = std::move(gens);
  ordered_json rels = ordered_json::array();
  for (const auto& r : p.relations) rels.push_back(elementToJson(p, r));
  doc["relations"] = std::move(rels);
  ordered_json diffs = ordered_json::object();
  for (const auto& [x, image] : p.differentials) diffs[p.generator(x).name] = elementToJson(p, image);
  doc["differentials"] = std::move(diffs);
  return doc.dump(2) + "\n";
}

Element parseElement(const Presentation& p, std::string_view text) {
  return elementFromJson(p, parseJson(text), "element");
}

std::string serializeElement(const Presentation& p, const Element& e) {
  return elementToJson(p, e).dump();
}

}  // namespace lieforge
