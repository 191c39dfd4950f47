#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nccalc {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::string detail;
};

/// ch, braid, theta-mult, drham, evaluators.
const std::vector<std::string>& suite_names();
/// Throws DomainError for an unknown suite name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed);
/// Runs one suite, or every suite for "all".
std::vector<SuiteResult> run_checks(const std::string& which, std::uint64_t seed);

}  // namespace nccalc
