#pragma once

#include "mmflow/config.hpp"
#include "mmflow/scheme.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace mmflow {

/// One pass/fail comparison against the tolerance bundle.
struct Check {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;
};

struct RunRecord {
    SchemeParams params;
    std::filesystem::path trajectory_csv;
    std::filesystem::path meta_json;
    double wall_seconds = 0.0;
    double euler_lagrange_max = 0.0;
    double min_step_slack = 0.0;
    double gronwall_slack = 0.0;
    double box_margin = 0.0;
    Mismatch mismatch;
    double increment_sum = 0.0;
    int tie_breaks = 0;
};

struct RunManifest {
    std::string config_hash;
    std::filesystem::path output_dir;
    std::vector<std::filesystem::path> files;
    std::vector<RunRecord> runs;
    std::vector<Check> checks;
    double wall_seconds = 0.0;

    [[nodiscard]] bool all_pass() const;
    [[nodiscard]] nlohmann::json to_json() const;
};

enum class Stage { Audit, Simulate, Critical, Costs, Full };

struct SweepResult {
    std::vector<Trajectory> trajectories;
    std::vector<RunRecord> records;
};

/// Runs every (eps, tau) pair of the sweep on up to `workers` threads. Results are
/// ordered as in the config regardless of scheduling.
[[nodiscard]] SweepResult run_sweep(const ExperimentConfig& config, int workers);

/// audit -> sweep -> extract_limit -> costs -> balance, truncated at `stage`; writes
/// every artifact under config.output_dir plus summary.json and manifest.json.
[[nodiscard]] RunManifest run_experiment(const ExperimentConfig& config, Stage stage = Stage::Full);

/// Long-format plot tables from an output directory holding manifest.json; returns the files written.
std::vector<std::filesystem::path> emit_plotdata(const std::filesystem::path& output_dir);

}  // namespace mmflow
