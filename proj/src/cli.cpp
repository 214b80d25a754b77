#include "lieforge/cli.hpp"

#include <sstream>

#include <json.hpp>

#include "lieforge/algebra.hpp"
#include "lieforge/errors.hpp"
#include "lieforge/format.hpp"
#include "lieforge/homology.hpp"
#include "lieforge/oracle.hpp"

namespace lieforge {

using nlohmann::ordered_json;

namespace {

ordered_json wordJson(const Presentation& p, const LieWord& w) {
  ordered_json a = ordered_json::array();
  for (GenId x : w) a.push_back(p.generator(x).name);
  return a;
}

ordered_json elementJson(const Presentation& p, const Element& e) {
  return ordered_json::parse(serializeElement(p, e));
}

std::string runDims(LieAlgebra& alg, const Command& cmd) {
  DimensionTable t = alg.dims(cmd.degree);
  if (cmd.json) {
    ordered_json j;
    j["dims"] = t.perDegree;
    ordered_json big = ordered_json::array();
    for (const auto& [key, n] : t.bigraded)
      big.push_back({{"degree", key.first}, {"homDegree", key.second}, {"dim", n}});
    j["bigraded"] = big;
    return j.dump() + "\n";
  }
  std::ostringstream os;
  os << "1.." << cmd.degree << ":";
  for (auto n : t.perDegree) os << ' ' << n;
  os << '\n';
  return os.str();
}

std::string runBasis(LieAlgebra& alg, const Command& cmd) {
  const auto words = alg.basisInDegree(cmd.degree);
  const Presentation& p = alg.presentation();
  if (cmd.json) {
    ordered_json j;
    j["basis"] = ordered_json::array();
    for (const auto& w : words) j["basis"].push_back(wordJson(p, w));
    return j.dump() + "\n";
  }
  std::string s;
  for (const auto& w : words) s += formatWord(p, w) + "\n";
  return s;
}

std::string renderElement(const Presentation& p, const Element& e, bool json) {
  if (json) {
    ordered_json j;
    j["element"] = elementJson(p, e);
    j["text"] = formatElement(p, e);
    return j.dump() + "\n";
  }
  return formatElement(p, e) + "\n";
}

std::string runHomology(LieAlgebra& alg, const Command& cmd) {
  HomologyTable t = homologyTable(alg, cmd.degree);
  if (cmd.json) {
    ordered_json j;
    j["homology"] = t.rows;
    return j.dump() + "\n";
  }
  return formatHomology(t);
}

CommandResult runOracleCheck(const Presentation& p, const Command& cmd) {
  Presentation free;
  free.field = FieldSpec{0};
  free.generators = p.generators;
  LieAlgebra alg(free);
  DimensionTable engine = alg.dims(cmd.degree);
  auto oracle = freeSuperDims(GeneratorCensus::of(p), cmd.degree);

  bool match = true;
  for (int d = 0; d < cmd.degree; ++d)
    match = match && engine.parity[d][0] == oracle[d].even && engine.parity[d][1] == oracle[d].odd;

  CommandResult r;
  r.exitCode = match ? exit_code::ok : exit_code::oracleMismatch;
  if (cmd.json) {
    ordered_json j;
    ordered_json e = ordered_json::array(), o = ordered_json::array();
    for (int d = 0; d < cmd.degree; ++d) {
      e.push_back({engine.parity[d][0], engine.parity[d][1]});
      o.push_back({oracle[d].even, oracle[d].odd});
    }
    j["engine"] = e;
    j["oracle"] = o;
    j["match"] = match;
    r.out = j.dump() + "\n";
    return r;
  }
  std::ostringstream os;
  os << "degree engine(even+odd) oracle(even+odd)\n";
  for (int d = 0; d < cmd.degree; ++d) {
    os << d + 1 << ' ' << engine.perDegree[d] << '(' << engine.parity[d][0] << '+' << engine.parity[d][1]
       << ") " << oracle[d].total() << '(' << oracle[d].even << '+' << oracle[d].odd << ")\n";
  }
  os << (match ? "ok" : "mismatch") << '\n';
  r.out = os.str();
  return r;
}

}  // namespace

CommandResult runCommand(const Command& cmd) {
  CommandResult r;
  Presentation p;
  try {
    p = readPresentation(cmd.input);
  } catch (const ParseError& e) {
    return {exit_code::parse, "", std::string("parse error: ") + e.what() + "\n"};
  }

  if (cmd.degree < 1 && cmd.kind != CommandKind::NormalForm && cmd.kind != CommandKind::Mult)
    return {exit_code::argument, "", "degree must be at least 1\n"};

  try {
    if (cmd.kind == CommandKind::OracleCheck) return runOracleCheck(p, cmd);

    EngineOptions options;
    options.char3Axiom = cmd.char3Axiom;
    LieAlgebra alg(p, options);
    switch (cmd.kind) {
      case CommandKind::Dims:
        r.out = runDims(alg, cmd);
        break;
      case CommandKind::Basis:
        r.out = runBasis(alg, cmd);
        break;
      case CommandKind::NormalForm: {
        Element e = parseElement(alg.presentation(), cmd.element);
        r.out = renderElement(alg.presentation(), alg.normalForm(e), cmd.json);
        break;
      }
      case CommandKind::Mult: {
        Element a = parseElement(alg.presentation(), cmd.element);
        Element b = parseElement(alg.presentation(), cmd.other);
        r.out = renderElement(alg.presentation(), alg.bracket(a, b), cmd.json);
        break;
      }
      case CommandKind::Homology:
        r.out = runHomology(alg, cmd);
        break;
      case CommandKind::OracleCheck:
        break;
    }
  } catch (const ValidationError& e) {
    return {exit_code::validation, "", std::string("invalid presentation: ") + e.what() + "\n"};
  } catch (const ParseError& e) {
    // element arguments
    return {exit_code::argument, "", std::string("bad element: ") + e.what() + "\n"};
  } catch (const DegreeError& e) {
    return {exit_code::argument, "", std::string("error: ") + e.what() + "\n"};
  }
  return r;
}

}  // namespace lieforge
