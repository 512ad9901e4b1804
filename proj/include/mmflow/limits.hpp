#pragma once

#include "mmflow/energy.hpp"
#include "mmflow/proximal.hpp"
#include "mmflow/regime.hpp"
#include "mmflow/scheme.hpp"

#include <vector>

namespace mmflow {

struct LimitOptions {
    double jump_factor = 20.0;        ///< displacement threshold, multiple of the median step
    double energy_tol_rel = 1e-3;     ///< dissipation threshold, relative to max(1, |F(0,u0)|)
    int window_steps = 10;            ///< w = window_steps * tau
    int merge_gap_steps = 10;         ///< clusters closer than this are one transition
    double consistency_tol = 0.05;    ///< cross-run sup distance at continuity times
    int consistency_samples = 400;
    double projection_radius = 0.0;   ///< <= 0 selects 0.02 * diam(box)
};

struct JumpRecord {
    double t_jump = 0.0;     ///< time of the largest step inside the transition
    double t_start = 0.0;    ///< node before the first transition step
    double t_end = 0.0;      ///< node after the last transition step
    double window = 0.0;     ///< w
    Point u_minus;
    Point u_plus;
    /// Raw window averages before refinement onto the critical set.
    Point u_minus_window;
    Point u_plus_window;
    double t_minus_window = 0.0;
    double t_plus_window = 0.0;
    /// Time at which the pre-jump branch was last followed (earlier than t_jump at a fold).
    double t_minus_branch = 0.0;
    bool refined = false;
    double dissipated = 0.0;  ///< energy dissipated by the trajectory across the transition
    double energy_drop = 0.0; ///< F(t_jump, u_minus) - F(t_jump, u_plus)
    double mu_atom = 0.0;

    [[nodiscard]] double exclusion_start() const { return t_start - window; }
    [[nodiscard]] double exclusion_end() const { return t_end + window; }
};

/// Approximate limit evolution: the finest run's constant interpolant plus
/// refined one-sided limits at each detected jump. Immutable once built.
class RegulatedCurve {
public:
    RegulatedCurve(Trajectory finest, Regime regime, std::vector<JumpRecord> jumps, double consistency_error);

    [[nodiscard]] const Trajectory& finest() const noexcept { return finest_; }
    [[nodiscard]] const Regime& regime() const noexcept { return regime_; }
    [[nodiscard]] const std::vector<JumpRecord>& jumps() const noexcept { return jumps_; }
    [[nodiscard]] double consistency_error() const noexcept { return consistency_error_; }
    [[nodiscard]] double end_time() const { return finest_.end_time(); }

    [[nodiscard]] Point value(double t) const { return interpolate_constant(finest_, t); }
    [[nodiscard]] bool in_exclusion(double t) const;
    /// u(t-) and u(t+): the constant interpolant away from transitions; inside an
    /// exclusion window the critical branch through the nearer window average.
    [[nodiscard]] Point left_limit(const EnergyModel& model, double t) const;
    [[nodiscard]] Point right_limit(const EnergyModel& model, double t) const;

private:
    [[nodiscard]] Point branch_value(const EnergyModel& model, const JumpRecord& j, double t, bool left) const;

    Trajectory finest_;
    Regime regime_;
    std::vector<JumpRecord> jumps_;
    double consistency_error_;
};

/// Transition clusters of one trajectory with window averages (not refined).
[[nodiscard]] std::vector<JumpRecord> detect_jumps(const Trajectory& traj, const EnergyModel& model,
                                                   const LimitOptions& options = {});

/// Builds the curve from a sweep ordered by decreasing epsilon; the last run is the finest.
/// Throws InconsistentSweep when coarser runs disagree at continuity times or the
/// declared regime does not match the sweep ratios.
[[nodiscard]] RegulatedCurve extract_limit(const std::vector<Trajectory>& sweep, const EnergyModel& model,
                                           const Regime& regime, const LimitOptions& options = {});

struct Atom {
    double t = 0.0;
    double value = 0.0;
};

/// One atom per jump, F(t,u_-) - F(t,u_+); NonpositiveAtom if any is <= 0.
[[nodiscard]] std::vector<Atom> defect_measure(const RegulatedCurve& curve, const EnergyModel& model);

struct StabilityReport {
    double continuity_max = 0.0;   ///< |grad F| (bv) or R_lambda (finite lambda) off the jump windows
    double one_sided_max = 0.0;    ///< same quantity at u_-(t_J), u_+(t_J)
    std::size_t samples = 0;
};

struct StabilityOptions {
    std::size_t max_samples = 4000;
    ProxOptions prox;
};

[[nodiscard]] StabilityReport check_stability(const RegulatedCurve& curve, const EnergyModel& model,
                                              const Regime& regime, const StabilityOptions& options = {});

struct Monotonicity {
    double max_increase = 0.0;
    /// Largest per-step consistency error between freezing u^k and u^{k-1} in the d_t F integral.
    double bound = 0.0;
    std::vector<double> times;
    std::vector<double> values;   ///< f(t) = F(t,u(t)) - int_0^t d_r F(r,u(r)) dr at nodes
};

[[nodiscard]] Monotonicity f_monotonicity(const RegulatedCurve& curve, const EnergyModel& model);

struct BalanceReport {
    Regime regime;
    std::vector<double> grid;                    ///< shared s and t sample times
    std::vector<std::vector<double>> residual;   ///< residual[i][j] for s = grid[i] <= t = grid[j], NaN below
    double residual_max = 0.0;
    double residual_mean = 0.0;
    StabilityReport stability;
    Monotonicity monotonicity;
};

/// Energy-balance residuals |F(t,u+(t)) + sum of jump costs in [s,t] - F(s,u-(s)) - int_s^t d_r F(r,u(r)) dr|
/// on a grid_size x grid_size triangular grid. cost_values holds one cost per jump.
[[nodiscard]] BalanceReport check_energy_balance(const RegulatedCurve& curve, const EnergyModel& model,
                                                 const std::vector<double>& cost_values, const Regime& regime,
                                                 int grid_size = 50, const StabilityOptions& stability = {});

/// int_a^b d_r F(r, u(r)) dr along the finest run's constant interpolant (exact for a frozen state).
[[nodiscard]] double power_integral(const RegulatedCurve& curve, const EnergyModel& model, double a, double b);

struct DensitySeries {
    std::vector<double> times;    ///< right end t^k of each interval
    std::vector<double> values;   ///< |grad F(t^k,u^k)|^2 / (4 eps) + eps/4 |(u^k - u^{k-1}) / tau|^2
    double integral = 0.0;
    double bound = 0.0;           ///< F(0,u^0) - F(t^m,u^m) + int_0^{t^m} d_r F(r, u(r)) dr
};

[[nodiscard]] DensitySeries dissipation_density(const Trajectory& traj, const EnergyModel& model);

/// Fraction of the density integral carried by the given time windows.
[[nodiscard]] double density_fraction_in(const DensitySeries& density, double tau,
                                         const std::vector<std::pair<double, double>>& windows);

}  // namespace mmflow
