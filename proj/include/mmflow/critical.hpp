#pragma once

#include "mmflow/energy.hpp"
#include "mmflow/proximal.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace mmflow {

enum class PointClass { LocalMin, Saddle, LocalMax, Degenerate };

[[nodiscard]] std::string_view to_string(PointClass c) noexcept;

struct CriticalOptions {
    double crit_tol = 1e-8;
    int grid_resolution = 401;   ///< scan points per axis (dim <= 3)
    int random_starts = 64;      ///< Newton starts when dim > 3
    std::uint64_t seed = 0;
    double merge_radius = 0.0;   ///< <= 0 selects 1e-4 * diam(box)
    std::vector<Point> seeds;    ///< extra Newton starts
};

/// Critical set C(t) found at a given scan resolution. Completeness is
/// best effort: roots between scan nodes may be missed on coarse grids.
struct CriticalAtlas {
    double t = 0.0;
    std::vector<Point> points;
    std::vector<PointClass> classes;
    /// +inf when fewer than two points were found.
    double min_separation = 0.0;
    double merge_radius = 0.0;
    int grid_resolution = 0;
    /// Number of raw roots absorbed into another within merge_radius.
    int merged = 0;
};

[[nodiscard]] CriticalAtlas critical_points(const EnergyModel& model, double t, const CriticalOptions& options);
[[nodiscard]] CriticalAtlas critical_points(const EnergyModel& model, double t, double crit_tol, int grid_resolution);

/// Hessian classification from central second differences of F (step 1e-4);
/// Degenerate when the smallest |eigenvalue| is below 1e-5.
[[nodiscard]] PointClass classify_critical_point(const EnergyModel& model, double t, const Point& x);

struct MoreauYosida {
    double value = 0.0;
    Point minimizer;
};

/// min_v F(t,v) + lambda/2 |v - u|^2, global over the working box.
[[nodiscard]] MoreauYosida moreau_yosida(const EnergyModel& model, double t, const Point& u, double lambda,
                                         const ProxOptions& options = {});

/// R_lambda(t,u) = F(t,u) - Moreau-Yosida value, clamped at 0.
[[nodiscard]] double residual_stability(const EnergyModel& model, double t, const Point& u, double lambda,
                                        const ProxOptions& options = {});

struct StableOptions {
    double stable_tol = 1e-9;
    int grid_resolution = 201;   ///< R_lambda scan points per axis (dim <= 3)
    int max_prox_iterations = 2000;
    ProxOptions prox;
    CriticalOptions critical;
};

struct StableSet {
    double t = 0.0;
    double lambda = 0.0;
    std::vector<Point> points;
};

/// Zero set of R_lambda(t, .): scan minima refined by iterating the proximal map,
/// then each zero is checked against the critical atlas (ConsistencyFailure if
/// a stable point has no critical point within merge_radius).
[[nodiscard]] StableSet stable_points(const EnergyModel& model, double t, double lambda, const StableOptions& options);
[[nodiscard]] StableSet stable_points(const EnergyModel& model, double t, double lambda, int grid_resolution);

/// Newton on grad F(t, .) = 0 from x; accepted if it converges within `radius` of x.
[[nodiscard]] std::optional<Point> project_to_critical(const EnergyModel& model, double t, const Point& x,
                                                       double radius, double tol = 1e-10);

struct BranchEnd {
    Point u;
    double t = 0.0;
    /// true when the branch could not be continued to the requested time (fold).
    bool terminated = false;
};

/// Natural-parameter continuation of the critical branch through `u` at `t_from`
/// toward `t_to` (either direction). Stops at the last time the branch exists,
/// located to `t_resolution`.
[[nodiscard]] BranchEnd continue_branch(const EnergyModel& model, const Point& u, double t_from, double t_to,
                                        double max_jump, double t_resolution = 1e-11);

}  // namespace mmflow
