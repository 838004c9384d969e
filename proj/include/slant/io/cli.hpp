#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace slant::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,        // bad arguments or schema violation
  kExitCylindrical = 2,  // director derivative vanishes somewhere on the grid
  kExitIo = 3,
};

struct AnalysisOptions {
  std::filesystem::path surface;
  std::size_t samples = 512;
  double tol = 1e-6;
  bool tol_given = false;  // sampled specs fall back to 1e-3 unless --tol was passed
  double angle_tol = 1e-3;
  std::optional<std::filesystem::path> out;
  bool csv = false;
};

struct Analyze {
  AnalysisOptions options;
};
struct Classify {
  AnalysisOptions options;
};
struct Verify {
  AnalysisOptions options;
  std::string theorem = "all";
};
struct Generate {
  std::filesystem::path surface;
  std::size_t samples = 512;
  std::optional<std::filesystem::path> out;
};
struct Export {
  std::filesystem::path surface;
  double v_min = -1.0;
  double v_max = 1.0;
  std::size_t columns = 64;
  std::size_t rows = 16;
  std::optional<std::filesystem::path> out;
};

using Command = std::variant<Analyze, Classify, Verify, Generate, Export>;

class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& message, std::string usage)
      : std::runtime_error(message), usage_(std::move(usage)) {}
  const std::string& usage() const { return usage_; }

 private:
  std::string usage_;
};

/// --help was requested; carries the help text.
struct HelpRequested {
  std::string text;
};

/// Parses arguments (without the program name). Throws UsageError or HelpRequested.
Command parse_cli(const std::vector<std::string>& args);

/// Executes a command; reports go to the --out file or to `out`. Returns an ExitCode.
int run(const Command& command, std::ostream& out, std::ostream& err);

/// parse_cli + run with every failure mapped to an exit code.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slant::cli
