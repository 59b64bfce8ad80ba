#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bowtie/corpus.hpp"

namespace bowtie {

struct SuiteOptions {
  std::uint64_t seed = 42;
  std::uint64_t samples = 1000;  // 0 skips the sampled checks
  std::uint64_t cap = 128;
};

struct SuiteReport {
  nlohmann::ordered_json doc;
  int checks = 0;
  int failures = 0;
  int skipped = 0;
  // per-section wall time; shown in the table rendering only so the json
  // stays byte-identical across runs
  std::vector<std::pair<std::string, double>> elapsed_ms;
};

// runs every registered identity over the built-in corpus
SuiteReport run_paper_suite(const SuiteOptions& options);

std::string render_json(const SuiteReport& report);
std::string render_table(const SuiteReport& report);

}  // namespace bowtie
