#pragma once

#include <cstdint>
#include <string>

#include "redform/core.hpp"

namespace redform {

struct FuzzConfig {
  long trials = 1000;
  std::uint64_t seed = 0;
  int t2_size = 2;
  int n_alts = 2;
  std::string family = "random";  // random | package | compromise
};

struct FuzzResult {
  bool ok = false;
  std::string report;        // deterministic given config
  std::string failure_dump;  // replayable instance file of a disagreement
  long implementable = 0;
  long disagreements = 0;
};

// Rotates interim generators (reduce-of-random-expost, free, cone) across
// trials and cross-checks the characterization against the LP ground truth.
FuzzResult run_fuzz(const FuzzConfig& cfg);

}  // namespace redform
