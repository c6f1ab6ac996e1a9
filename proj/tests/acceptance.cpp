#include <iostream>

#include "stein/verify.hpp"

// End-to-end acceptance gate: runs every numbered cross-check and prints one
// PASS/FAIL line per criterion. Nonzero exit if anything fails.
int main() {
  bool ok = true;
  for (const auto& r : stein::verify::run_all()) {
    std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name;
    if (!r.passed) {
      std::cout << " (" << r.detail << ")";
      ok = false;
    }
    std::cout << std::endl;
  }
  return ok ? 0 : 1;
}
