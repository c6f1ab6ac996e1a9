#ifndef STEIN_VERIFY_HPP
#define STEIN_VERIFY_HPP

#include <string>
#include <vector>

namespace stein::verify {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // empty when passed
};

/// The numbered end-to-end checks (1..8). Each one cross-validates the
/// closed-form counts against an independent route: brute-force counting
/// over small finite fields, symmetric-function identities, or structural
/// invariants. Exceptions are caught and reported as failures.
CheckResult run_criterion(int id);
std::vector<CheckResult> run_all();

}  // namespace stein::verify

#endif
