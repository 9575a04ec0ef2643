#pragma once

#include "einsu/liealg.hpp"
#include "einsu/report.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace einsu {

/// Inclusive integer range "a..b" (or a single value).
struct IntRange {
  long lo = 0;
  long hi = 0;
};
IntRange parse_range(const std::string& text);

struct RunConfig {
  std::string command;
  long k1 = 0, k = 0, p = 0;
  IntRange k1_range, k_range, p_range;
  std::vector<int> partition;
  int precision_bits = 256;
  std::uint64_t seed = 42;
  int trials = 20;
  int max_n = 10;  // verify refuses partitions with larger N
  int explore = 0;
  bool tables = false;
  std::string format = "json";
  std::string output;
};

enum ExitCode { kExitOk = 0, kExitUsage = 2, kExitExpectation = 3, kExitNumerical = 4 };

/// One named check of the verification suite.
struct VerifyCheck {
  std::string name;
  long checked = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  std::string note;
};

struct VerifyReport {
  Partition partition;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<VerifyCheck> checks;
  std::vector<TailSumResolution> tail_sum;
  bool pass() const;
};

/// Closed-form vs brute-force structure constants, center action, bracket relations and
/// Ricci closed forms vs the Koszul oracle at `trials` seeded random metrics.
VerifyReport run_verification(const Partition& partition, int trials, std::uint64_t seed);
Json verify_json(const VerifyReport& r);
Table verify_table(const VerifyReport& r);

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_certify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses arguments (argv[0] is the program name) and dispatches; returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace einsu
