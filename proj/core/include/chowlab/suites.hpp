#pragma once

// Named verification suites. Each suite is a list of independent cases run on
// a small worker pool; results are sorted by case id.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chowlab {

struct SuiteOptions {
  int max_n = 4;
  int max_p = 3;
  std::uint32_t max_degree = 6;
  /// "even", "odd" or unset (both); only kvadrika uses it.
  std::optional<std::string> parity;
  /// 0 means hardware concurrency capped by CHOWLAB_THREADS.
  unsigned threads = 0;
  unsigned long long budget = 200'000'000ULL;
};

struct CaseResult {
  std::string id;
  nlohmann::json params = nlohmann::json::object();
  bool pass = false;
  nlohmann::json details = nlohmann::json::object();
  /// Informational cases pass once they complete; their verdicts live in
  /// details.
  bool informational = false;
};

struct SuiteResult {
  std::string suite;
  std::vector<CaseResult> cases;
  bool pass = true;
  double elapsed_seconds = 0.0;

  /// {"suite","cases":[{"id","params","pass","details","informational"}],"pass","elapsed"}
  nlohmann::json to_json(bool with_elapsed = true) const;
};

/// lemmaS, codim2, weil, primerchik, odd911, motives, kvadrika, dvamr, i2i,
/// counts, all.
const std::vector<std::string>& suite_names();

/// Throws UsageError for an unknown suite or bad options.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options = {});

/// Worker count after applying CHOWLAB_THREADS.
unsigned worker_count(unsigned requested, std::size_t jobs);

}  // namespace chowlab
