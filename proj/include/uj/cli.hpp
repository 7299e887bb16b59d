#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace uj::cli {

enum class Command { Smear, Blocks, Dilate, JointlyMeasurable, LambdaOpt, Chsh, BoxChsh, Sweep, Acceptance };
enum class Format { Json, Csv };

struct RunConfig {
  Command command = Command::Acceptance;
  // inputs
  std::string obs, p, q, o1, o2, state, settings, box;
  // numeric parameters
  std::optional<double> lambda;
  double tol = 1e-4;
  std::uint64_t seed = 0x5eedULL;
  std::size_t mesh = 1000;
  std::string mode = "worst-case";
  bool oracle = false;
  bool expect_feasible = false;
  double start = 0.5, stop = 0.9, step = 0.05;
  unsigned threads = 1;
  // output
  std::string output;  // empty: stdout
  Format format = Format::Json;
};

/// Rejects out-of-range parameters (tol outside [1e-12, 1e-2], bad grids).
void validate(const RunConfig& config);

/// Executes the command and writes its report. Returns 0 on success, 2 for an
/// infeasible verdict under --expect-feasible, 1 on any error (message on err).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

struct SweepRow {
  double lambda = 0;
  std::string verdict;
  double smeared_chsh = 0;
  double bound = 0;  // 2 / lambda
};

/// One row per lambda on the grid, ascending: joint-measurability verdict for
/// Alice's pair (a1, a2), the smeared CHSH value, and the bound 2/lambda.
std::vector<SweepRow> sweep(const RunConfig& config);

/// '.' decimal, ',' separator, LF endings, 15 significant digits.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// UJ_THREADS if set and positive, else 1.
unsigned threads_from_env();

}  // namespace uj::cli
