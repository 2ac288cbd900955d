// One line per acceptance criterion; exit status 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qsa/suites.hpp"

using namespace qsa;

namespace {

struct Criterion {
  int id;
  const char* label;
  double budget_s;  // 0: no time limit
  std::function<std::vector<Report>()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "identity suite", 5, [] { return std::vector<Report>{identity_checks()}; }},
      {2, "factor algebra maps", 0, [] { return std::vector<Report>{quotient_checks()}; }},
      {3, "prime spectrum", 0, [] { return std::vector<Report>{spectrum_checks()}; }},
      {4, "automorphisms", 0, [] { return std::vector<Report>{aut_checks(25)}; }},
      {5, "generalized Weyl algebras", 0, [] { return std::vector<Report>{gwa_checks(100, 200)}; }},
      {6, "weight modules", 60, [] { return std::vector<Report>{weight_module_checks()}; }},
      {7, "unfaithful modules", 0, [] { return std::vector<Report>{unfaithful_checks()}; }},
      {8, "centers", 120, [] { return std::vector<Report>{center_checks()}; }},
      {9, "growth of A", 0, [] { return std::vector<Report>{growth_checks()}; }},
      {10, "l-normal elements", 0, [] { return std::vector<Report>{l_normal_checks(50)}; }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Report> reports;
    std::string error;
    try {
      reports = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::size_t total = 0, bad = 0;
    for (const auto& r : reports) {
      total += r.checks.size();
      bad += r.failures();
    }
    const bool in_time = c.budget_s <= 0 || secs < c.budget_s;
    const bool ok = error.empty() && bad == 0 && total > 0 && in_time;
    std::printf("criterion %2d %-26s %s  %zu/%zu checks  %.2f s", c.id, c.label, ok ? "PASS" : "FAIL", total - bad, total,
                secs);
    if (c.budget_s > 0) std::printf(" (limit %.0f s)", c.budget_s);
    std::printf("\n");
    if (!error.empty()) std::printf("    exception: %s\n", error.c_str());
    for (const auto& r : reports)
      for (const auto& k : r.checks)
        if (!k.passed) std::printf("    FAIL %s%s%s\n", k.name.c_str(), k.detail.empty() ? "" : " : ", k.detail.c_str());
    if (!ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
