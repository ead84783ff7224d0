#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sdt/symclass.hpp"

namespace sdt {

enum class OutputFormat { Json, Csv, Pretty };

struct CommandConfig {
  std::string subcommand;  // classes, table, dims, orbits, basis, verify
  int n = 0;
  std::optional<int> m;
  std::string character;  // chi:<i> | zeta:<h> | psi:<h> | all; empty = none
  OutputFormat format = OutputFormat::Json;
  std::string output;  // empty = stdout
  unsigned jobs = 1;
  std::uint64_t budget = kDefaultBudget;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verification_failed = 1;
inline constexpr int usage = 2;
inline constexpr int budget_refused = 3;
}  // namespace exit_code

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  int n = 0;
  int m = 0;
  std::vector<VerifyCheck> checks;
  std::vector<std::string> findings;  // closed-form discrepancies, reported only
  std::vector<std::string> skipped;   // enumeration checks beyond the budget
  bool passed() const;
};

/// The full invariant suite for one (n, m).
VerifyReport verify(int n, int m, std::uint64_t budget, unsigned jobs);

/// Budget from SDT_BUDGET when set and valid, else kDefaultBudget.
std::uint64_t budget_from_environment();

int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sdt
