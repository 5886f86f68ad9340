#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace routh::cli {

enum class Command { volume, first_kind, subset, oracle, identity, table };
enum class Format { json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitCheckFailed = 2;

struct RunConfig {
  Command command = Command::volume;
  std::optional<int> n;
  /// Explicit "p/q" ratios; when empty, `k` expands to n copies.
  std::vector<std::string> ratios;
  std::optional<std::string> k;
  std::uint64_t seed = 1;
  int samples = 100;
  Format format = Format::json;

  std::string method = "closed_form";     // volume
  int max_n = 20;                         // volume --method inclusion_exclusion
  std::vector<int> indices;               // subset
  std::string identity_id = "all";        // identity
  int bound = 9;                          // identity sample bound
  int max_identity_n = 10;                // identity e2
  std::string kind = "central";           // table
  std::optional<std::string> n_range;     // table, "lo..hi" or "n"
};

/// Executes one command. The report goes to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 for invalid input, 2 when a cross-check fails.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a config and runs it.
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace routh::cli
