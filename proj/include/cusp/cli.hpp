#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "cusp/selftest.hpp"

namespace cusp {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Parsed command line. Empty strings mean "use the command's default".
struct JobConfig {
  std::string command;  // zeta | orders | matrix | expand | selftest
  std::string ring = "poly q=2";
  bool ring_given = false;
  int r = 2;
  std::string ideal;  // a for coset zetas and division forms, the twist b for discriminants
  std::string level;  // n
  std::string x;      // coset representative for zeta
  std::string u1;     // first coordinate of u for division forms
  std::int64_t prec = -1;
  std::string format = "table";
  std::uint64_t seed = kDefaultSeed;
  std::string mode;
  int weight = 0;
  std::vector<std::string> suites;
};

struct CommandResult {
  Json data;
  int exit_code = 0;  // nonzero when data records a failed check
};

// Throws ParameterError, ConsistencyError, PrecisionError or DomainError.
CommandResult run_command(const JobConfig& cfg);
std::string render(const Json& data, const std::string& format);
// 2 for parameter and domain errors, 3 for consistency, 4 for precision, 1 otherwise.
int exit_code_for(const std::exception& e);

}  // namespace cusp
