// Runs the bundled verification suite and reports one line per check.
// Exit status 0 only when every check passes within its budget.

#include <cstdio>

#include "girthlab/checks.hpp"
#include "girthlab/corpus.hpp"

int main() {
  using namespace girthlab;
  auto outcomes = run_checks(bundled_corpus());
  size_t passed = 0;
  for (const CheckOutcome& o : outcomes) {
    std::printf("%-26s %s  %9.1f ms  (budget %.0f ms)\n", o.name.c_str(),
                o.passed ? "pass" : "FAIL", o.elapsed_ms, o.budget_ms);
    if (!o.passed) std::printf("    %s\n", o.message.c_str());
    if (o.passed) ++passed;
  }
  std::printf("%zu/%zu checks passed\n", passed, outcomes.size());
  return passed == outcomes.size() ? 0 : 1;
}
