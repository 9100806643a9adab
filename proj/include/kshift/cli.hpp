#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace kshift::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUncertified = 2;
inline constexpr int kExitInconclusive = 3;
inline constexpr int kExitUsage = 64;

enum class OutputFormat { Text, Json, Csv };

struct RunConfig {
  std::string command;
  std::string weight_spec = "paper:c=2";
  double c = 2.0;
  bool c_given = false;
  bool rate_given = false;
  double rate = 2.0;
  std::string kind = "forward";
  std::int64_t power = 1;
  std::int64_t window = 1000000;
  int max_power_exponent = 12;
  unsigned witness_k_max = 2;
  std::int64_t dense_horizon = 4096;
  std::int64_t range = 20;
  std::int64_t n0 = 1000;
  int precision_bits = 80;
  OutputFormat output = OutputFormat::Text;
  std::uint64_t seed = 1;
  std::string lemma_id;
};

/// Runs one command line (args excludes the program name) and returns the
/// exit code: 0 pass, 1 check failed, 2 uncertified, 3 inconclusive, 64 usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kshift::cli
