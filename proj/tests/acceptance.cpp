// Runs every acceptance fixture and prints one line per criterion.
#include <cstdio>
#include <string>

#include "artin/corpus.hpp"

int main(int argc, char** argv) {
  std::string filter = argc > 1 ? argv[1] : "";
  std::vector<artin::FixtureResult> results = artin::run_fixtures(filter);
  std::sort(results.begin(), results.end(),
            [](const auto& a, const auto& b) { return a.criterion < b.criterion; });
  int failed = 0;
  for (const auto& r : results) {
    std::printf("criterion %2zu %-20s %s  (%.2f s)  %s\n", r.criterion, r.name.c_str(), r.passed ? "PASS" : "FAIL",
                r.seconds, r.title.c_str());
    if (!r.passed) {
      ++failed;
      for (const auto& c : r.checks)
        if (!c.passed) std::printf("    failed: %s%s%s\n", c.name.c_str(), c.detail.empty() ? "" : ": ", c.detail.c_str());
    }
  }
  std::printf("%zu/%zu criteria passed\n", results.size() - failed, results.size());
  return failed == 0 && !results.empty() ? 0 : 1;
}
