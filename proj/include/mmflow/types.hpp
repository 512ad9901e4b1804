#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mmflow {

using Point = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

enum class ErrorKind {
    NonFinite,
    AuditFailure,
    InvalidParams,
    InnerSolveFailure,
    BoxEscape,
    EstimateViolation,
    ConsistencyFailure,
    InconsistentSweep,
    NonpositiveAtom,
    AmbiguousRegime,
    ConfigError,
    IoError,
};

[[nodiscard]] std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Axis-aligned box [lo, hi] in R^n.
struct Box {
    Point lo;
    Point hi;

    [[nodiscard]] Eigen::Index dim() const { return lo.size(); }
    [[nodiscard]] double diameter() const { return (hi - lo).norm(); }
    [[nodiscard]] bool contains(const Point& x, double slack = 0.0) const {
        return ((x.array() >= lo.array() - slack) && (x.array() <= hi.array() + slack)).all();
    }
    /// Distance from x to the nearest face (negative when outside).
    [[nodiscard]] double distance_to_boundary(const Point& x) const {
        return std::min((x - lo).minCoeff(), (hi - x).minCoeff());
    }
    [[nodiscard]] Point clamp(const Point& x) const { return x.cwiseMax(lo).cwiseMin(hi); }
    [[nodiscard]] Point center() const { return 0.5 * (lo + hi); }
};

}  // namespace mmflow
