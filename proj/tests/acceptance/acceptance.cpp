// Runs every acceptance criterion and prints one PASS/FAIL line each.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "lieprop/suite/suite.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 0;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  int failed = 0;
  for (int id = 1; id <= lieprop::suite::kCriteria; ++id) {
    const auto start = std::chrono::steady_clock::now();
    const lieprop::suite::Row row = lieprop::suite::criterion(id, seed);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %-4s %-22s %6.2fs  %s\n", row.passed ? "PASS" : "FAIL", row.id.c_str(), row.name.c_str(), seconds,
                row.detail.c_str());
    std::fflush(stdout);
    if (!row.passed) ++failed;
  }
  std::printf("%d/%d criteria passed\n", lieprop::suite::kCriteria - failed, lieprop::suite::kCriteria);
  return failed == 0 ? 0 : 1;
}
