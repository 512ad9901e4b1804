#pragma once

#include "mmflow/energy.hpp"
#include "mmflow/proximal.hpp"

#include <cstdint>
#include <vector>

namespace mmflow {

struct SchemeParams {
    double epsilon = 1e-2;
    double tau = 1e-3;
    int inner_grid_resolution = 161;
    double newton_tol = 1e-9;
    int newton_max_iter = 80;
    int random_starts = 12;      ///< multistart count when dim > 3
    int atlas_refreshes = 40;    ///< critical-point atlas rebuilds per run when dim > 3
    std::uint64_t seed = 0;

    [[nodiscard]] double ratio() const noexcept { return epsilon / tau; }
    [[nodiscard]] ProxOptions prox_options(std::uint64_t salt = 0) const;
};

/// Throws InvalidParams unless epsilon, tau > 0 and tau <= horizon.
void validate(const SchemeParams& params, double horizon);

/// Discrete solution u^0..u^m of the iterated minimum problem, t^k = k tau.
/// Immutable once built.
class Trajectory {
public:
    Trajectory(SchemeParams params, int dim, std::vector<double> states);
    Trajectory(SchemeParams params, int dim, std::vector<double> states, std::vector<double> objective_gap,
               std::vector<double> el_residual, int tie_breaks);

    [[nodiscard]] const SchemeParams& params() const noexcept { return params_; }
    [[nodiscard]] int dim() const noexcept { return dim_; }
    /// Number of steps m; there are m+1 nodes.
    [[nodiscard]] std::size_t steps() const noexcept { return nodes() - 1; }
    [[nodiscard]] std::size_t nodes() const noexcept { return states_.size() / static_cast<std::size_t>(dim_); }
    [[nodiscard]] double time(std::size_t k) const noexcept { return static_cast<double>(k) * params_.tau; }
    [[nodiscard]] double end_time() const noexcept { return time(steps()); }
    [[nodiscard]] Eigen::Map<const Point> state(std::size_t k) const {
        return {states_.data() + k * static_cast<std::size_t>(dim_), dim_};
    }
    [[nodiscard]] const std::vector<double>& raw_states() const noexcept { return states_; }
    /// Scan certificate of step k (index 0 unused, always 0).
    [[nodiscard]] const std::vector<double>& objective_gap() const noexcept { return gap_; }
    /// |(eps/tau)(u^k - u^{k-1}) + grad F(t^k, u^k)| per step (index 0 unused).
    [[nodiscard]] const std::vector<double>& euler_lagrange_residual() const noexcept { return el_; }
    [[nodiscard]] int tie_breaks() const noexcept { return tie_breaks_; }

    /// Copy with node k replaced; used to build perturbed trajectories.
    [[nodiscard]] Trajectory with_state(std::size_t k, const Point& u) const;

private:
    SchemeParams params_;
    int dim_;
    std::vector<double> states_;
    std::vector<double> gap_;
    std::vector<double> el_;
    int tie_breaks_ = 0;
};

/// One step of the scheme: global minimizer of F(t_k, .) + eps/(2 tau) |. - u_prev|^2.
[[nodiscard]] Point step(const EnergyModel& model, double t_k, const Point& u_prev, const SchemeParams& params);

/// Runs the recursion from u0 over the partition {k tau : k = 0..floor(T/tau)}.
[[nodiscard]] Trajectory run(const EnergyModel& model, const Point& u0, const SchemeParams& params);

/// Left-continuous piecewise constant interpolant: u^k on (t^{k-1}, t^k].
[[nodiscard]] Point interpolate_constant(const Trajectory& traj, double t);
/// Piecewise affine interpolant through the nodes.
[[nodiscard]] Point interpolate_affine(const Trajectory& traj, double t);
/// Least partition node >= t (clamped to the last node).
[[nodiscard]] std::size_t node_at_or_after(const Trajectory& traj, double t);

struct EstimateReport {
    /// Per-step slack of the upper energy estimate (index 0 unused).
    std::vector<double> step_slack;
    double min_slack = 0.0;
    std::size_t worst_step = 0;
    /// max over node pairs s < t of LHS - RHS of the integral (dissipation) form.
    double integral_form_violation = 0.0;
    /// sum_k |int_{t^{k-1}}^{t^k} [d_t F(r,u^k) - d_t F(r,u^{k-1})] dr|: the consistency error
    /// between the piecewise-constant and previous-node integrands, bounding any violation above.
    double integral_form_allowance = 0.0;
    [[nodiscard]] bool integral_form_ok() const noexcept {
        return integral_form_violation <= integral_form_allowance + 1e-9;
    }
};

/// Checks the per-step upper energy estimate (slack >= -1e-9, else EstimateViolation
/// naming the step) and evaluates the integrated dissipation form over all node pairs.
[[nodiscard]] EstimateReport verify_energy_estimates(const Trajectory& traj, const EnergyModel& model);

struct Mismatch {
    double l2 = 0.0;
    double linf = 0.0;
};

/// Exact L2 and sup norms of (piecewise constant - piecewise affine) over [0, t^m].
[[nodiscard]] Mismatch interpolant_mismatch(const Trajectory& traj);

/// sum_k tau |u^k - u^{k-1}|^2.
[[nodiscard]] double squared_increment_sum(const Trajectory& traj);

}  // namespace mmflow
