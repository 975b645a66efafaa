#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <boolgb/boolgb.hpp>

namespace boolgb::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kResourceLimit = 3,
  kVerificationFailed = 4,
};

struct Caps {
  BuchbergerLimits buchberger;
  EnumerationLimits enumeration;
  std::uint32_t max_n = kDefaultMaxN;
};

/// Parses "max_pairs=..,max_basis=..,max_vars=..,max_n=.." (any subset, comma
/// or whitespace separated) over `base`. Throws Error on unknown keys.
Caps parse_caps(const std::string& spec, Caps base = {});

struct RunConfig {
  std::string command;
  std::uint32_t n = 0;
  std::optional<std::uint32_t> n_max;
  char family = 'H';
  MonomialOrder order = kDegLex;
  Engine engine = Engine::Full;
  Caps caps;
  bool oracle = false;
  bool stats = false;
  std::string format;
  std::string out;
  std::string input;
  std::string poly;
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Reads BOOLGB_CAPS from the environment.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_gen(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_gb(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_nf(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_member(const RunConfig& config, std::ostream& out, std::ostream& err);

inline constexpr const char* kCsvHeader =
    "n,inputCount,inputBitsize,inputMaxDegree,gbCount,predictedGbCount,solutionCount,"
    "predictedSolutionCount,wallTimeMs";

std::string csv_row(const GrowthRecord& row);

}  // namespace boolgb::cli
