#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "distspec/graph.hpp"
#include "distspec/spectrum.hpp"
#include "distspec/symmetry.hpp"

namespace distspec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUsage = 2;

enum class Command { Spectrum, Quotient, VerifyLcr, Scan, Distances, CheckDr };
enum class OutputFormat { Text, Json, Csv };

/// Inclusive range "a..b", or a single value "a".
struct NRange {
  int first = 0;
  int last = 0;
};

struct RunConfig {
  Command command = Command::Spectrum;
  std::string family;      ///< exclusive with input_path
  std::string input_path;  ///< edge-list file
  NRange n;
  int k = 2;
  std::vector<int> jumps{1};
  SpectrumMethod method = SpectrumMethod::RankSweep;
  OutputFormat format = OutputFormat::Text;
  std::string output_path;  ///< empty: the out stream
  bool assert_integral = false;
  std::vector<std::string> transitive_generators;  ///< cycle notation, for edge-list input
  std::vector<std::string> stabilizer_generators;
};

/// Thrown for bad flags or inputs; run() maps it to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

NRange parse_n_range(const std::string& text);

/// Families: crown, lcr, line-crown, johnson, line-johnson, cycle, complete, circulant.
Graph build_family(const std::string& family, int n, int k, const std::vector<int>& jumps);
/// Transitive group plus a stabilizer with a singleton orbit, where the family provides one.
std::optional<SymmetryData> family_symmetry(const std::string& family, int n, int k);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);
/// Parses argv-style arguments (without the program name) and runs them.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace distspec::cli
