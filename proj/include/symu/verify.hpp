#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symu/goodness.hpp"

namespace symu {

struct VerifyOptions {
  int max_order = 16;         // corpus scope
  bool families_only = false; // only the named positive/negative families
  uint64_t seed = kDefaultSeed;
  long long sample_pairs = 1000000;
  int jobs = 1;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs the goodness-module invariant sweep over the corpus: oracle
/// equivalence at order <= 8, theorem equivalence for nonabelian 2-groups,
/// K-independence GF(2) vs GF(4), the p = 2 obstruction, lemma sweeps,
/// xy-normal-form coverage, family positives/negatives, and the
/// "only two" exponent-4 count.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

}  // namespace symu
