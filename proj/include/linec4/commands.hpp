#pragma once

// The command-line subcommands as plain functions returning exit codes, so
// they can be driven from tests as well as from the executable.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "linec4/feasibility.hpp"

namespace linec4 {

namespace exit_code {
inline constexpr int kOk = 0;
/// decide / construct: infeasible parameters. verify: a discrepancy.
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;
/// Supported envelope or search budget exceeded.
inline constexpr int kBudget = 3;
/// The oracle contradicts the decision procedure.
inline constexpr int kContradiction = 4;
/// Unexpected internal failure.
inline constexpr int kInternal = 5;
}  // namespace exit_code

int cmd_decide(const Params& p, std::ostream& out);

/// Writes the document to `out_path`, or to `out` when no path is given.
/// Nothing is written unless the decomposition verifies.
int cmd_construct(const Params& p, const std::optional<std::filesystem::path>& out_path,
                  std::ostream& out);

int cmd_verify(const std::filesystem::path& doc_path, std::ostream& out);

struct OracleOptions {
  std::uint64_t node_limit = 10'000'000;
  std::chrono::milliseconds time_limit{60'000};
  std::optional<std::filesystem::path> out_path;
};

int cmd_oracle(const Params& p, const OracleOptions& options, std::ostream& out);

struct TableOptions {
  std::uint64_t max_m = 1;
  std::uint64_t max_n = 1;
  std::vector<std::uint64_t> lambdas;
  bool check = false;
  std::uint64_t oracle_nodes = 1'000'000;
  std::chrono::milliseconds oracle_time{5'000};
};

/// CSV with columns m,n,lambda,feasible,conditions,cycles,status.
int cmd_table(const TableOptions& options, std::ostream& out);

/// Parses "3", "1..4" or "1,2,8" (and mixtures like "1..3,8"). Throws
/// UsageError.
std::vector<std::uint64_t> parse_lambda_list(const std::string& text);

}  // namespace linec4
