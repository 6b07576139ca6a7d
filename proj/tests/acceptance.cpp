// Acceptance suite: one line per criterion, exit 0 only if every criterion
// holds exactly.

#include <cstring>
#include <iostream>
#include <string>

#include "scvertex/suite.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 0x5c7e57;
  int jobs = 1;
  for (int k = 1; k < argc; ++k) {
    if (!std::strcmp(argv[k], "--seed") && k + 1 < argc) seed = std::stoull(argv[++k]);
    if (!std::strcmp(argv[k], "--jobs") && k + 1 < argc) jobs = std::stoi(argv[++k]);
  }
  bool ok = true;
  for (auto& ln : scv::run_paper_suite(seed, jobs)) {
    std::cout << (ln.ok ? "PASS" : "FAIL") << "  " << ln.name;
    if (!ln.detail.empty()) std::cout << "  [" << ln.detail << "]";
    std::cout << "\n";
    ok = ok && ln.ok;
  }
  std::cout << (ok ? "acceptance: all criteria hold" : "acceptance: FAILURES") << std::endl;
  return ok ? 0 : 1;
}
