#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace morava {

// One acceptance criterion: name, outcome, elapsed time against its pinned
// budget, and the first failure detail if any.
struct VerifyResult {
  std::string name;
  bool pass = false;
  double seconds = 0;
  double limit_seconds = 0;  // 0 = untimed
  std::string detail;
};

struct VerifySummary {
  unsigned seed = 0;
  std::vector<VerifyResult> results;
  bool all_pass() const;
};

// Runs the full verification matrix, streaming one line per criterion.
// Deterministic for a fixed seed; the seed is echoed in the output.
VerifySummary run_verification(std::ostream& out, unsigned seed = 20260823);

}  // namespace morava
