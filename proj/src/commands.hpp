#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "exactring.hpp"
#include "weights.hpp"

namespace cms {

enum class ExitCode : int { Ok = 0, VerifyFailed = 1, Usage = 2, Internal = 3 };

/// Thrown for bad user input; maps to ExitCode::Usage.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class Command { Jack, Pn, Verify, Spectrum };
enum class OutputFormat { Json, Table };

struct RunConfig {
  Command command = Command::Jack;
  std::size_t N = 0;  ///< 0 means "take it from n"
  Weight n;
  std::string algo = "novel";  ///< sutherland | novel | both
  std::optional<BigRational> lambda;  ///< unset means symbolic
  bool basis_s = false;
  std::string suite = "all";  ///< exact | numeric | all
  std::uint64_t seed = 1;
  std::map<std::string, double> tolerance;  ///< per-identity overrides; key "" applies to all FD checks
  OutputFormat output = OutputFormat::Json;
  int degree = 0;
  std::size_t n_max = 3;
  int deg_max = 4;
};

struct CommandResult {
  ExitCode status = ExitCode::Ok;
  std::string out;    ///< stdout payload
  std::string error;  ///< diagnostic for non-zero status
};

/// Parses "sym" (→ nullopt), "p/q", integers and exact decimals.
std::optional<BigRational> parse_lambda(std::string_view text);
/// Parses "2,1,0" (negative entries allowed).
Weight parse_weight(std::string_view text);
Command parse_command(std::string_view name);
/// "1e-6" sets the default FD tolerance; "name=1e-6" overrides one identity family.
void parse_tolerance(std::string_view text, std::map<std::string, double>& into);

/// Runs one command; never throws.
CommandResult run(const RunConfig& config);

}  // namespace cms
