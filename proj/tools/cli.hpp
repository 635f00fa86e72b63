#pragma once

// The hopfcheck command line: `verify`, `export` and `list-suites`.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hopf::cli {

enum ExitCode { kOk = 0, kConfigError = 1, kCheckFailed = 2 };

struct RunConfig {
  std::optional<std::string> algebra;  // zoo selector, e.g. "abc", "tensor:3"
  std::optional<std::string> spec;     // spec-file path
  std::optional<std::string> ring;
  std::optional<int> max_degree;
  std::vector<std::string> suites;     // empty: every catalogue suite
  int p = 1;
  std::uint64_t seed = 1;
  std::string format = "text";         // text | json
  std::optional<std::string> out;
};

/// Default truncation degree of a zoo entry when --maxdeg is absent.
int default_max_degree(const std::string& selector);

/// Runs the configured suites and writes the report to `out` (or to
/// config.out); diagnostics go to `err`. Returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Writes the selected algebra in spec-file form.
int export_algebra(const RunConfig& config, std::ostream& out, std::ostream& err);

/// One `id<TAB>anchor<TAB>summary` line per suite.
std::string list_suites();

/// Full argument parsing and dispatch.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hopf::cli
