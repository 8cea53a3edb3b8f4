// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
#include "kcatalan/checks.hpp"

#include <chrono>
#include <iostream>

int main() {
  const auto start = std::chrono::steady_clock::now();
  const auto results = kcatalan::checks::run_all();
  std::size_t passed = 0;
  for (const auto& r : results) {
    kcatalan::checks::print(std::cout, r);
    if (r.passed) ++passed;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << passed << "/" << results.size() << " acceptance criteria passed in " << seconds
            << "s\n";
  return passed == results.size() ? 0 : 1;
}
