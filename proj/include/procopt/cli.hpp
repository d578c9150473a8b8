#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "procopt/agents.hpp"
#include "procopt/forest.hpp"
#include "procopt/schema.hpp"

namespace procopt::cli {

struct ForestSettings {
    bool grid_search = false;
    /// Optional CSV of combinations to search; empty = the stock 3960 grid.
    std::string grid_file;
    ForestHyperParams fixed;
    double train_fraction = 0.75;
    int folds = 3;
};

/// Everything a pipeline run needs, read from one config file. Fields a
/// given command does not use may stay empty.
struct RunConfig {
    std::string schema_file;
    std::string dataset_csv;
    long synth_count = 0;
    /// Unset = registered default noise; explicit per-criterion sigmas
    /// otherwise ("zero" in the file maps to all zeros).
    std::optional<std::vector<double>> noise_sigma;
    ForestSettings forest;
    std::string matrix_csv;
    double cr_threshold = 0.08;
    std::string weights_file;
    std::vector<std::vector<double>> scenarios;
    AgentConfig agent;
    std::uint64_t seed = 0;
    std::string out_dir = ".";
    std::string models_dir;
    /// 1-based scenario selector (--scenario); unset = all.
    std::optional<std::size_t> scenario_filter;
};

RunConfig load_run_config(const std::string& path);

ProcessSchema load_schema(const RunConfig& cfg);

int cmd_synth(const RunConfig& cfg);
int cmd_train(const RunConfig& cfg);
int cmd_ahp(const RunConfig& cfg);
int cmd_optimize(const RunConfig& cfg);
int cmd_compare(const RunConfig& cfg);
int cmd_report(const RunConfig& cfg);

}  // namespace procopt::cli
