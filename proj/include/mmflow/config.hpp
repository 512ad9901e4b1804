#pragma once

#include "mmflow/costs.hpp"
#include "mmflow/energy.hpp"
#include "mmflow/limits.hpp"
#include "mmflow/regime.hpp"
#include "mmflow/scheme.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace mmflow {

/// Acceptance thresholds applied to an experiment; each has a default and may be overridden.
struct Tolerances {
    double balance = 5e-3;
    double stability = 1e-4;
    double cost_identity = 5e-3;
    double monotonicity = 1e-6;
    double estimate_slack = 1e-9;
    std::optional<double> euler_lagrange;   ///< defaults to scheme.newton_tol
    std::optional<int> expected_jumps;
    std::optional<double> jump_time;
    double jump_time_tol = 0.02;
    std::optional<Point> u_minus;
    std::optional<Point> u_plus;
    double state_tol = 0.01;
    std::optional<std::pair<double, double>> jump_time_range;   ///< open interval
};

struct CostQuery {
    double t = 0.0;
    Point u;
    Point v;
    bool chain = false;   ///< c^lambda instead of c_t
    double lambda = 0.0;
};

struct ExperimentConfig {
    std::filesystem::path source;
    std::string raw_text;
    ModelPtr model;
    Point u0;
    std::vector<SweepPoint> sweep;          ///< strictly decreasing in epsilon
    std::optional<double> law_power;        ///< p of tau = c eps^p, when the law form was used
    std::optional<double> law_coefficient;
    Regime regime;
    SchemeParams scheme;                    ///< epsilon/tau are filled per run
    LimitOptions limits;
    PathConfig path;
    ChainConfig chain;
    int critical_resolution = 401;
    std::vector<double> critical_times;
    std::vector<CostQuery> cost_queries;
    int audit_samples = 100;
    int balance_grid = 50;
    std::size_t stability_samples = 4000;
    Tolerances tolerances;
    std::filesystem::path output_dir = "out";
    std::uint64_t seed = 0;
    int workers = 1;

    [[nodiscard]] std::string hash() const;   ///< FNV-1a of the raw config text, hex
};

/// Parses the YAML config; validates the sweep ordering and the regime declaration
/// against the sweep law. Throws ConfigError (or InvalidParams for tau > T).
[[nodiscard]] ExperimentConfig load_config(const std::filesystem::path& path);
[[nodiscard]] ExperimentConfig parse_config(const std::string& text, const std::filesystem::path& source = {});

}  // namespace mmflow
