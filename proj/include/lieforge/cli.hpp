#pragma once

// Command dispatch behind the `lieforge` executable, kept in the library so
// the commands can be run and compared in-process.

#include <filesystem>
#include <string>

namespace lieforge {

enum class CommandKind { Dims, Basis, NormalForm, Mult, Homology, OracleCheck };

struct Command {
  CommandKind kind = CommandKind::Dims;
  int degree = 0;                  // N for dims/homology/oracle-check, d for basis
  std::string element;             // nf, and the left factor of mult
  std::string other;               // right factor of mult
  std::filesystem::path input;
  bool json = false;
  bool char3Axiom = true;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int parse = 1;
inline constexpr int validation = 2;
inline constexpr int argument = 3;
inline constexpr int oracleMismatch = 4;
}  // namespace exit_code

struct CommandResult {
  int exitCode = exit_code::ok;
  std::string out;
  std::string err;
};

CommandResult runCommand(const Command& cmd);

}  // namespace lieforge
