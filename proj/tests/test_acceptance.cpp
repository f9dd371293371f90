// One line per acceptance criterion. With a path argument, criterion 9 also
// runs that `zolo` executable's selftest and requires exit 0 within budget.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "zolo/acceptance.hpp"

int main(int argc, char** argv) {
  using namespace zolo;
  const auto start = std::chrono::steady_clock::now();
  std::vector<CriterionResult> results = run_acceptance({});

  if (argc > 1) {
    CriterionResult& nine = results.back();
    const std::string cmd = std::string("\"") + argv[1] + "\" selftest > /dev/null";
    const auto t0 = std::chrono::steady_clock::now();
    const int status = std::system(cmd.c_str());
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = status == 0 && secs <= kSelftestSeconds;
    nine.passed = nine.passed && ok;
    char buf[96];
    std::snprintf(buf, sizeof buf, "; zolo selftest exit %d in %.2f s", status, secs);
    nine.detail += buf;
  }

  int failed = 0;
  for (const CriterionResult& r : results) {
    std::printf("[%s] criterion %d: %s -- %s (%.2f s)\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str(), r.seconds);
    failed += r.passed ? 0 : 1;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %.2f s\n", static_cast<int>(results.size()) - failed, results.size(), total);
  return failed == 0 ? 0 : 1;
}
