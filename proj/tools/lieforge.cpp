#include <iostream>

#include <CLI11.hpp>

#include "lieforge/cli.hpp"

using lieforge::Command;
using lieforge::CommandKind;

int main(int argc, char** argv) {
  CLI::App app{"Bases, dimensions, normal forms and homology of presented graded Lie superalgebras"};
  app.require_subcommand(1);

  Command cmd;
  std::string input;
  bool noChar3 = false;
  app.add_option("--input,-i", input, "presentation file")->required();
  app.add_flag("--json", cmd.json, "machine-readable output");
  app.add_flag("--no-char3-axiom", noChar3, "do not impose [x,[x,x]] = 0 on odd generators in characteristic 3");

  auto* dims = app.add_subcommand("dims", "dimensions in degrees 1..N");
  dims->add_option("N", cmd.degree)->required();
  auto* basis = app.add_subcommand("basis", "basis words of degree d");
  basis->add_option("d", cmd.degree)->required();
  auto* nf = app.add_subcommand("nf", "normal form of an element, e.g. '[[1,[\"a\",\"c\"]]]'");
  nf->add_option("element", cmd.element)->required();
  auto* mult = app.add_subcommand("mult", "bracket of two elements");
  mult->add_option("left", cmd.element)->required();
  mult->add_option("right", cmd.other)->required();
  auto* homology = app.add_subcommand("homology", "homology table up to degree N");
  homology->add_option("N", cmd.degree)->required();
  auto* oracle = app.add_subcommand("oracle-check", "compare free-algebra dimensions with the PBW count");
  oracle->add_option("N", cmd.degree)->required();

  for (auto* sub : {dims, basis, nf, mult, homology, oracle}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : lieforge::exit_code::argument;
  }

  if (*dims) cmd.kind = CommandKind::Dims;
  else if (*basis) cmd.kind = CommandKind::Basis;
  else if (*nf) cmd.kind = CommandKind::NormalForm;
  else if (*mult) cmd.kind = CommandKind::Mult;
  else if (*homology) cmd.kind = CommandKind::Homology;
  else cmd.kind = CommandKind::OracleCheck;
  cmd.input = input;
  cmd.char3Axiom = !noChar3;

  auto result = lieforge::runCommand(cmd);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exitCode;
}
