#ifndef GPD_LAWS_HPP
#define GPD_LAWS_HPP

#include <cstdint>
#include <string>
#include <vector>

// Randomized law suites: each suite checks one of the library's theorems
// on generated instances and reports a deterministic summary. The CLI
// check-laws command runs all of them.

namespace gpd::laws {

struct LawParams {
  uint64_t seed = 7;
  int max_objects = 4;
  int max_arrows = 12;
  int cases = 25;
};

struct LawResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::vector<std::string> notes;  // first few failure descriptions
};

std::vector<LawResult> run_all_laws(const LawParams& params);

/// Deterministic textual report (the check-laws output body).
std::string format_results(const LawParams& params,
                           const std::vector<LawResult>& results);

}  // namespace gpd::laws

#endif  // GPD_LAWS_HPP
