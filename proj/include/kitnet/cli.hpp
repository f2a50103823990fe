#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kitnet/scan.hpp"

namespace kitnet {
namespace cli {

enum class Command { point, sweep, detect, zero_modes, validate };

struct RunConfig {
  Command command = Command::point;
  ChainSpec chain;
  double mu_lo = 0.0;
  double mu_hi = 3.0;
  int points = 121;
  double resolution = 1e-3;
  std::vector<MeasureKind> measures;  // defaults to concurrence
  Normalization normalization = Normalization::max_normalized;
  LogBase log_base = LogBase::natural;
  RdmConvention rdm_convention = RdmConvention::spin_picture;
  unsigned workers = 0;
  std::string output_path;       // empty: stdout
  std::string network_out_path;  // point command: weight-matrix CSV prefix
  // locate_c1 is folded into detect for periodic chains
  bool locate_c1 = false;

  SweepSpec to_sweep_spec() const;
};

// Exit codes: 0 success, 2 configuration error, 3 numerical failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

// Parses command line plus optional flat-JSON config file (--config);
// explicit flags override file values; unknown keys are rejected. Throws
// DomainError with a message naming the offending key.
RunConfig parse_config(const std::vector<std::string>& args);

int execute(const RunConfig& config);

// Full entry point: parse, execute, map errors to exit codes.
int run_main(int argc, const char* const* argv);

}  // namespace cli
}  // namespace kitnet
