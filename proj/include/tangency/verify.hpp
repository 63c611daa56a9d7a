#pragma once

// Self-checks runnable from the command line: oracle equivalence sweeps,
// figure reproductions and randomized classifier round trips.

#include <string>
#include <utility>
#include <vector>

#include "tangency/classifier.hpp"
#include "tangency/io.hpp"

namespace tangency {

struct VerifyOptions {
  int max_d = -1;  // -1 picks the suite's default size
  int max_n = -1;
  unsigned seed = 20240611;
};

struct SuiteResult {
  explicit SuiteResult(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  long checks = 0;
  long failure_count = 0;
  std::vector<std::string> failures;  // first few counterexamples
  // A stated claim that does not hold verbatim. Each one is also pinned by
  // an expect() on its characterized shape, so an unexplained case fails.
  long deviation_count = 0;
  std::vector<std::string> deviations;
  Json details = Json::object();

  bool passed() const { return failure_count == 0; }
  void expect(bool ok, const std::string& what);
  void deviation(const std::string& what);
  /// "PASS", "DEVIATES" or "FAIL".
  std::string status() const;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
/// Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opts = {});

Json to_json(const SuiteResult& r);

/// Twenty designed one-parameter degenerations, each with its samples
/// ordered toward the degenerate value t = 0.
struct DesignedFamily {
  std::string name;
  ParametricPolynomial family;
  std::vector<Rational> samples;
};
std::vector<DesignedFamily> designed_families();

}  // namespace tangency
