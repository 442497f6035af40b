#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "stickersim/album.hpp"

namespace stickersim {

// Bound on one reported statistic; the run fails (exit code 1) if violated.
struct Expectation {
    std::string statistic;
    double lo = 0.0;
    double hi = 0.0;
};

// A reproducible experiment. `kind` selects the driver:
//   collection-curve      one seeded collection run; CSV of the distinct-count
//                         and duplicates-per-packet curves
//   completion-histogram  `replicates` collection runs; histogram CSV plus
//                         mean/std/skewness/min/max
//   display-analysis      ingest displays (or the bundled survey), pairwise
//                         duplicate matrix, run lengths, Monte Carlo interval,
//                         significance count
//   observed-counts       compare observed per-display duplicate counts with
//                         the model expectation and interval
struct ExperimentSpec {
    std::string name;
    std::string kind;
    std::string preset = "bundesliga2014";
    std::string mix = "iid";
    int target = -1;  // -1: collect to B - K
    long long replicates = 100000;
    std::uint64_t seed = 1;
    std::string input_csv;             // display-analysis; "" uses bundled data
    std::vector<int> observed_counts;  // observed-counts
    std::vector<Expectation> expectations;

    nlohmann::json to_json() const;
    static ExperimentSpec from_json(const nlohmann::json& j);
};

struct ExpectationResult {
    Expectation expectation;
    double value = 0.0;
    bool passed = false;
};

struct ExperimentReport {
    ExperimentSpec spec;
    std::map<std::string, double> statistics;
    nlohmann::json details;  // kind-specific payload (matrix, intervals, ...)
    std::vector<std::string> outputs;
    std::vector<ExpectationResult> expectation_results;
    bool all_passed = true;

    nlohmann::json to_json() const;
};

// Executes the spec; CSV outputs land in out_dir (created if missing).
ExperimentReport run(const ExperimentSpec& spec, const std::string& out_dir);

// Bundled, named specs: fig1, fig2, fig3, table1-analysis, wm-displays.
std::vector<ExperimentSpec> bundled_specs();
std::optional<ExperimentSpec> find_bundled_spec(const std::string& name);

}  // namespace stickersim
