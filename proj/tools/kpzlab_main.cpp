// Experiment runner: identity tests and sampling experiments from flat
// key=value configs with CLI overrides. Exit codes: 0 all pass, 1 test
// failure, 2 parse/validation error, 3 runtime error.
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kpzlab/harness.hpp"

using kpzlab::ExperimentConfig;
using kpzlab::TestReport;

namespace {

struct ParsedJob {
  std::string test_id;
  std::string sample_id;
  ExperimentConfig config;
};

// flat key=value lines; '#' starts a comment
void apply_kv(ParsedJob& job, const std::string& key, const std::string& val) {
  if (key == "test") {
    job.test_id = val;
  } else if (key == "sample") {
    job.sample_id = val;
  } else if (key == "replicas") {
    job.config.replicas = std::stol(val);
  } else if (key == "seed") {
    job.config.seed = std::stoull(val);
  } else if (key == "output") {
    job.config.output_path = val;
  } else {
    job.config.params[key] = std::stod(val);
  }
}

void load_config_file(ParsedJob& job, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config: " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string trimmed;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
    if (trimmed.empty()) continue;
    auto eq = trimmed.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("bad config line: " + line);
    apply_kv(job, trimmed.substr(0, eq), trimmed.substr(eq + 1));
  }
}

void parse_manifest_line(ParsedJob& job, const std::string& line) {
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("bad manifest token: " + tok);
    apply_kv(job, tok.substr(0, eq), tok.substr(eq + 1));
  }
  if (job.test_id.empty() && job.sample_id.empty())
    throw std::invalid_argument("manifest line names no test or sample");
}

void write_text(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::fputs(body.c_str(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write: " + path);
  out << body;
}

std::string csv_of(const kpzlab::SampleRun& run) {
  std::string body = "replica,seed,value\n";
  char buf[96];
  for (std::size_t i = 0; i < run.values.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%" PRIu64 ",%.17g\n", i, run.seeds[i],
                  run.values[i]);
    body += buf;
  }
  return body;
}

int run_one(const ParsedJob& job, std::vector<TestReport>& reports) {
  if (!job.test_id.empty()) {
    TestReport r =
        kpzlab::run_identity_test(job.test_id, job.config, job.config.seed);
    reports.push_back(r);
    std::printf("%-10s statistic=%.6g threshold=%.6g replicas=%ld %.2fs %s\n",
                r.test_id.c_str(), r.statistic, r.threshold, r.replica_count,
                r.runtime, r.pass ? "PASS" : "FAIL");
    return r.pass ? 0 : 1;
  }
  kpzlab::SampleRun run =
      kpzlab::run_sample_experiment(job.sample_id, job.config, job.config.seed);
  write_text(job.config.output_path, csv_of(run));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kpzlab: distributional-identity tests and samplers"};
  app.require_subcommand(1);

  ParsedJob job;
  std::string config_path, manifest_path, json_path;
  std::map<std::string, double> cli_params;

  CLI::App* run = app.add_subcommand("run", "run one test or sampler");
  run->add_option("--test", job.test_id, "identity test id");
  run->add_option("--sample", job.sample_id, "sampling experiment id");
  run->add_option("--config", config_path, "flat key=value config file");
  run->add_option("--replicas", job.config.replicas, "replica count");
  run->add_option("--seed", job.config.seed, "base seed");
  run->add_option("--output", job.config.output_path, "CSV output path");
  run->add_option("--report", json_path, "JSON report path");
  for (const char* key :
       {"theta", "n", "r", "p", "t", "x", "y", "step", "eps", "N", "h1", "h2",
        "tau", "nu", "mu", "t_lo", "alpha", "threshold", "n_lo", "n_hi"})
    run->add_option("--" + std::string(key), cli_params[key]);

  CLI::App* suite = app.add_subcommand("suite", "run a manifest of configs");
  suite->add_option("manifest", manifest_path, "manifest path")->required();
  suite->add_option("--report", json_path, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::vector<TestReport> reports;
  int worst = 0;
  try {
    if (run->parsed()) {
      if (!config_path.empty()) load_config_file(job, config_path);
      for (const auto& [k, v] : cli_params)
        if (run->count("--" + k)) job.config.params[k] = v;
      if (job.test_id.empty() == job.sample_id.empty()) {
        std::fprintf(stderr, "need exactly one of --test / --sample\n");
        return 2;
      }
      worst = run_one(job, reports);
    } else {
      std::ifstream in(manifest_path);
      if (!in) {
        std::fprintf(stderr, "cannot open manifest: %s\n",
                     manifest_path.c_str());
        return 2;
      }
      std::string line;
      while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = true;
        for (char ch : line)
          if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
        if (blank) continue;
        ParsedJob item;
        parse_manifest_line(item, line);
        worst = std::max(worst, run_one(item, reports));
      }
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "runtime error: %s\n", e.what());
    return 3;
  }

  if (!json_path.empty()) {
    try {
      nlohmann::json j = reports;
      write_text(json_path, j.dump(2) + "\n");
    } catch (const std::exception& e) {
      std::fprintf(stderr, "runtime error: %s\n", e.what());
      return 3;
    }
  }
  return worst;
}
