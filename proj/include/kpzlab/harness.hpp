#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace kpzlab {

// One distributional-identity check: pass iff statistic <= threshold.
struct TestReport {
  std::string test_id;
  double statistic = 0.0;
  double threshold = 0.0;
  bool pass = false;
  long replica_count = 0;
  double runtime = 0.0;  // seconds
};

void to_json(nlohmann::json& j, const TestReport& r);

// Flat experiment configuration: numeric parameters plus plumbing. params
// override each test's built-in defaults (replicas, grid steps, model
// parameters); unknown keys are ignored by tests that do not use them.
struct ExperimentConfig {
  std::map<std::string, double> params;
  long replicas = 0;  // 0 = test default
  uint64_t seed = 0;
  std::string output_path;

  double get(const std::string& key, double fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  }
  bool has(const std::string& key) const { return params.count(key) != 0; }
};

// Catalog dispatch. Throws std::invalid_argument on an unknown id.
TestReport run_identity_test(const std::string& test_id,
                             const ExperimentConfig& config, uint64_t seed);

const std::vector<std::string>& identity_test_catalog();

// Sampling experiments for the CLI: one value per replica, deterministic in
// (sample_id, config, seed). Throws std::invalid_argument on an unknown id.
struct SampleRun {
  std::vector<double> values;
  std::vector<uint64_t> seeds;  // per-replica derived seeds
};

SampleRun run_sample_experiment(const std::string& sample_id,
                                const ExperimentConfig& config, uint64_t seed);

const std::vector<std::string>& sample_experiment_catalog();

}  // namespace kpzlab
