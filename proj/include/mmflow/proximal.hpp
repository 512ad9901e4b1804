#pragma once

#include "mmflow/energy.hpp"

#include <cstdint>
#include <span>

namespace mmflow {

/// Settings of the global inner solver shared by the scheme step and the
/// Moreau-Yosida envelope.
struct ProxOptions {
    int grid_resolution = 161;  ///< points per axis of the global scan (n <= 3)
    double newton_tol = 1e-9;   ///< stopping tolerance on the objective gradient norm
    int newton_max_iter = 80;
    int polish_seeds = 4;       ///< lowest discrete local minima of the scan that get polished
    int random_starts = 12;     ///< multistart count used instead of the scan when n > 3
    std::uint64_t seed = 0;
    double tie_tol = 1e-10;
};

struct ProxResult {
    Point x;
    double objective = 0.0;
    /// |grad F(t,x) + mu (x - center)|, the Euler-Lagrange residual.
    double gradient_residual = 0.0;
    /// Lowest scanned objective minus the returned objective (>= 0 certifies the scan found nothing better).
    double scan_gap = 0.0;
    bool tie_break = false;
};

/// Global minimizer over the working box of
///   x -> F(t,x) + mu/2 |x - center|^2.
/// Candidates come from a uniform scan (n <= 3) or multistart (n > 3), the
/// center itself and `extra_seeds`; each is polished by damped Newton.
/// Throws InnerSolveFailure when no polished candidate beats the center and
/// BoxEscape when the minimizer sits on the box boundary.
[[nodiscard]] ProxResult proximal_argmin(const EnergyModel& model, double t, const Point& center, double mu,
                                         const ProxOptions& options, std::span<const Point> extra_seeds = {});

struct NewtonResult {
    Point x;
    double residual = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Damped Newton on the smooth objective F(t,.) + mu/2 |. - center|^2 starting at `start`,
/// iterates clamped to the working box. mu = 0 gives plain energy descent.
[[nodiscard]] NewtonResult polish_minimizer(const EnergyModel& model, double t, const Point& center, double mu,
                                            const Point& start, double tol, int max_iter);

/// Visits every node of a uniform grid with `resolution` points per axis on `box`.
template <typename Visitor>
void for_each_grid_point(const Box& box, int resolution, Visitor&& visit) {
    const auto n = box.dim();
    Eigen::VectorXi index = Eigen::VectorXi::Zero(n);
    Point x = box.lo;
    const Point step = (box.hi - box.lo) / static_cast<double>(resolution - 1);
    std::size_t flat = 0;
    while (true) {
        for (Eigen::Index i = 0; i < n; ++i) x[i] = box.lo[i] + step[i] * index[i];
        visit(flat, static_cast<const Eigen::VectorXi&>(index), static_cast<const Point&>(x));
        ++flat;
        Eigen::Index axis = 0;
        while (axis < n) {
            if (++index[axis] < resolution) break;
            index[axis] = 0;
            ++axis;
        }
        if (axis == n) break;
    }
}

}  // namespace mmflow
