#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qpt {

/// Outcome of one named verification suite. Every tolerance is exact; a case
/// fails only on an exact mismatch, so failures == 0 is the pass condition.
struct SuiteResult {
  std::string name;
  int truncation = 12;
  long long cases = 0;
  long long failures = 0;
  std::vector<std::string> notes;  // first few failure descriptions

  bool passed() const { return failures == 0 && cases > 0; }
};

/// All suite names, in report order.
const std::vector<std::string>& suite_names();

/// Runs one suite with an explicit seed; deterministic for a given seed.
SuiteResult run_suite(const std::string& name, std::uint64_t seed);

}  // namespace qpt
