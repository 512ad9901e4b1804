#pragma once

#include "mmflow/critical.hpp"
#include "mmflow/energy.hpp"
#include "mmflow/proximal.hpp"

#include <vector>

namespace mmflow {

struct PathConfig {
    int grid_resolution = 81;       ///< points per axis of the graph (dim >= 2)
    int max_graph_nodes = 250000;   ///< caps the per-axis resolution in higher dimension
    int smoothing_levels = 4;       ///< polyline refinement levels after the graph search
    int smoothing_sweeps = 12;
    double quad_tol = 1e-11;
    bool check_resolution = false;  ///< recompute at half resolution and flag > 1% changes
    bool critical_waypoints = true; ///< also try routes pinned through nearby critical points
    int critical_resolution = 201;  ///< atlas scan resolution for the waypoints
    int max_waypoints = 4;
};

struct PathWitness {
    double t = 0.0;
    Point u1;
    Point u2;
    std::vector<Point> polyline;
    double cost = 0.0;
    int resolution = 0;
    bool resolution_warning = false;
};

/// int |grad F(t, .)| along a polyline, segment by segment with adaptive quadrature.
[[nodiscard]] double polyline_cost(const EnergyModel& model, double t, const std::vector<Point>& polyline,
                                   double quad_tol = 1e-11);

/// Viscous jump cost c_t(u1, u2) = inf over paths of int |theta'| |grad F(t, theta)|.
/// In one dimension it is the integral of |dF/du| over the segment; otherwise a
/// grid shortest path refined by polyline smoothing (an upper bound).
[[nodiscard]] PathWitness viscous_cost(const EnergyModel& model, double t, const Point& u1, const Point& u2,
                                       const PathConfig& config = {});

struct ChainWitness {
    double t = 0.0;
    double lambda = 0.0;
    std::vector<Point> chain;
    double cost = 0.0;
    int candidates = 0;
    int max_links = 0;
};

/// sum_{i<N} lambda/2 |w_i - w_{i+1}|^2 + sum_{i<=N} R_lambda(t, w_i).
[[nodiscard]] double chain_energy(const EnergyModel& model, double t, const std::vector<Point>& chain, double lambda,
                                  const ProxOptions& prox = {});

struct ChainConfig {
    int grid_resolution = 101;  ///< uniform candidate grid per axis (dim <= 2; 11 for dim 3; none above)
    int max_links = 0;          ///< <= 0 selects 2 * #critical points + 4
    int orbit_length = 400;     ///< proximal-map iterations from each endpoint
    ProxOptions prox;
    CriticalOptions critical;
    StableOptions stable;
};

/// Discrete transition cost c^lambda(t, u, v): the cheapest chain from u to v over a
/// candidate node set (endpoints, stable and critical points, a grid and the
/// proximal orbits of both endpoints) with at most max_links links.
[[nodiscard]] ChainWitness transition_cost(const EnergyModel& model, double t, const Point& u, const Point& v,
                                           double lambda, const ChainConfig& config = {});

}  // namespace mmflow
