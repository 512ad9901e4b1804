#pragma once

#include "mmflow/energy.hpp"
#include "mmflow/scheme.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace mmflow {

struct AuditOptions {
    int sample_count = 100;
    std::uint64_t seed = 0;
    double tol_fd = 1e-5;
    int separation_times = 9;         ///< t samples for the critical-point separation
    std::optional<Point> u0;          ///< enables the sublevel (coercivity) check
};

struct AuditReport {
    double c1 = 0.0;
    double c2 = 0.0;
    /// Largest relative excess of |d_t F| over C1 (F + C2) on a fresh validation sample (0 if none).
    double f2_max_violation = 0.0;
    double f3_min_separation = 0.0;           ///< +inf when every sampled t has at most one critical point
    std::vector<double> f3_times;
    std::vector<double> f3_separation;
    double f5_lipschitz = 0.0;
    double fd_gradient_error = 0.0;           ///< max |grad - FD| / (1 + |grad|)
    double fd_time_error = 0.0;
    double rho = 0.0;                         ///< (F(0,u0) + C2) e^{C1 T} - C2, when u0 is known
    double boundary_min = 0.0;                ///< smallest sampled F on the box faces
    bool coercivity_ok = true;
};

/// Empirical audit of the standing assumptions on samples of [0,T] x working box.
/// Throws AuditFailure naming the assumption and the witness point.
[[nodiscard]] AuditReport audit_assumptions(const EnergyModel& model, const AuditOptions& options);
[[nodiscard]] AuditReport audit_assumptions(const EnergyModel& model, int sample_count);

/// A priori bound F(t,u) <= (F(0,u0) + C2) e^{C1 t} - C2 along a trajectory; returns the
/// smallest slack (negative when violated beyond rounding).
[[nodiscard]] double gronwall_slack(const Trajectory& traj, const EnergyModel& model, const AuditReport& audit);

/// Doubles a centred cube until the sublevel at level rho stays inside it.
[[nodiscard]] Box derive_working_box(EnergyModel& model, const Point& u0, std::uint64_t seed = 0);

}  // namespace mmflow
