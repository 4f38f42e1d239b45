#pragma once

#include <string>
#include <vector>

#include "p1gw/correlators.hpp"

namespace p1gw {

struct VerifyReport {
  std::string suite;
  int checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> known_conflicts;

  bool ok() const { return failures.empty(); }
};

/// Insertion lists covered by the published values: the five flagship
/// correlators, the b = 1 table through n = 12 and the other tables for
/// n >= 2 with total weight at most 16.
std::vector<std::vector<int>> acceptance_correlators();

VerifyReport verify_identities(int depth = 12);
VerifyReport verify_degree1(const EngineOptions& options = {});
VerifyReport verify_tables(const EngineOptions& options = {});
VerifyReport verify_stability(const EngineOptions& options = {});
VerifyReport verify_determinant(int depth = 20);

const std::vector<std::string>& verify_suites();
VerifyReport run_verify_suite(const std::string& suite, const EngineOptions& options = {});

}  // namespace p1gw
