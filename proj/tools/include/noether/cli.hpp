#pragma once
//
// noether-calc: batch runner over the library. Every command is a thin
// composition of library calls; reports are deterministic for a fixed
// configuration and seed.
//
// Exit codes: 0 success, 1 verdict-level failure, 2 input error.
//

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace noether::cli {

inline constexpr const char* schema = "noether-calc/1";

struct RunConfig {
  std::string command;  // compactness | decompose | index | topology | gallery | scaling
  std::string family;   // eq50 | eqAA (| fredprime for gallery)
  std::string input;    // operator JSON file
  std::string op;       // named operator
  std::string parametrix;        // named operator
  std::string parametrix_input;  // operator JSON file
  int truncation = 16;
  double eps = 1e-8;
  double margin = 0.9;
  std::optional<int> m_max;
  std::vector<int> levels{8, 16, 32, 64};
  std::string topology = "all";
  std::string output;  // empty: stdout
  std::string format = "json";
  std::uint64_t seed = 20040117;
};

struct RunResult {
  int exit_code = 0;
  std::string report;  // JSON or CSV text
  std::string message;  // diagnostics for stderr
};

// Never throws; library errors are mapped onto exit codes.
RunResult run(const RunConfig& config);

// Parses argv with CLI11, runs, writes the report to --output or `out`.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace noether::cli
