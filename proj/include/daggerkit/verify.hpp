#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "daggerkit/hermforms.hpp"

namespace dk {

struct CaseFailure {
  std::uint64_t seed;
  std::string digest;
  std::string message;
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::vector<CaseFailure> failures;
  std::int64_t elapsedMs = 0;
  std::uint64_t digest = 0;  // over case inputs only; wall time excluded

  bool passed() const { return failures.empty(); }
  /// "SUITE name cases failures elapsed_ms seed"
  std::string reportLine() const;
  /// Same content minus the elapsed field; byte-identical across replays.
  std::string deterministicLine() const;
};

const std::vector<std::string>& suiteNames();

SuiteResult runSuite(const std::string& name, std::uint64_t seed, std::size_t scale);

std::vector<SuiteResult> runAll(std::uint64_t seed, std::size_t scale);

std::string deterministicReport(const std::vector<SuiteResult>& results);

}  // namespace dk
