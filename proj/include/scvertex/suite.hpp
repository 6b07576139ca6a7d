#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace scv {

struct SuiteLine {
  std::string name;
  bool ok = false;
  std::string detail;
};

// The ten acceptance criteria, in order. Exact arithmetic throughout; a
// criterion fails on any deviation from canonical equality.
SuiteLine criterion_golden_brackets();
SuiteLine criterion_shifted_superconformal();
SuiteLine criterion_conformal_weights();
SuiteLine criterion_shifted_n2_pair();
SuiteLine criterion_component_central_charges();
SuiteLine criterion_nk2_superconformal();
SuiteLine criterion_brst(std::uint64_t seed);
SuiteLine criterion_axiom_properties(std::uint64_t seed);
SuiteLine criterion_reduction(std::uint64_t seed);
SuiteLine criterion_ansatz();

std::vector<SuiteLine> run_paper_suite(std::uint64_t seed, int jobs = 1);

}  // namespace scv
