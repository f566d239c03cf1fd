#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace strongfact {

/// Outcome of a built-in property sweep.
struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;   // first few failures
  std::map<std::string, double> metrics;

  void record(bool ok, const std::string& what);
};

/// hardy, kellogg, hardy-littlewood, roundtrip, orthonormality, parseval.
SuiteResult run_suite(const std::string& name, std::uint64_t seed = 0);
std::vector<std::string> suite_names();

std::string to_json(const SuiteResult& r, int indent = 2);

}  // namespace strongfact
