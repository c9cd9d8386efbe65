// One line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "grossen/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty()) ids = grossen::all_criteria();
  bool ok = true;
  grossen::run_acceptance(ids, [&](const grossen::CriterionResult& r) {
    std::printf("criterion %d %-26s %s  %7.2fs  %s\n", r.id, r.name.c_str(), r.pass ? "PASS" : "FAIL", r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
    ok = ok && r.pass;
  });
  return ok ? 0 : 1;
}
