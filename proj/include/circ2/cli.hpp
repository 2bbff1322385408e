#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <ostream>
#include <string>
#include <vector>

#include "circ2/rational.hpp"

namespace circ2::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitUsage = 64;

enum class Subcommand { Det, Perm, Inv, Drazin, Rank, Untangle, Digraph, Verify };
enum class Format { Text, Json, Dot };

struct Command {
  Subcommand subcommand = Subcommand::Det;
  std::int64_t n = 0;
  std::int64_t s1 = 0;
  std::int64_t s2 = 0;
  std::optional<Rational> a;
  std::optional<Rational> b;
  Format format = Format::Text;

  std::vector<Rational> coeffs;  // rank: general circulant first row
  bool dense = false;            // untangle: print the block-diagonal matrix
  bool symbolic = false;         // digraph: label arcs "a"/"b"
  std::int64_t n_max = 10;       // verify
  std::vector<std::pair<Rational, Rational>> pairs;  // verify
};

/// Thrown for malformed or inconsistent arguments; maps to exit status 64.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses argv (without the program name). Throws UsageError. Help requests
/// return std::nullopt after printing to `out`.
std::optional<Command> parse_command(const std::vector<std::string>& args, std::ostream& out);

/// Executes a parsed command; returns the process exit status.
int run(const Command& command, std::ostream& out, std::ostream& err);

/// parse_command + run with usage errors mapped to exit 64.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circ2::cli
