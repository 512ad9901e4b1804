#pragma once

#include "mmflow/types.hpp"

#include <span>
#include <string>

namespace mmflow {

enum class RegimeKind { BvInfinity, FiniteLambda };

struct Regime {
    RegimeKind kind = RegimeKind::BvInfinity;
    double lambda = 0.0;  ///< limit of eps/tau, only meaningful for FiniteLambda

    static Regime bv() { return {}; }
    static Regime finite(double lambda) { return {RegimeKind::FiniteLambda, lambda}; }
    [[nodiscard]] bool is_bv() const noexcept { return kind == RegimeKind::BvInfinity; }
    /// "bv_infinity" or "finite_lambda(<lambda>)".
    [[nodiscard]] std::string name() const;
};

struct SweepPoint {
    double epsilon = 0.0;
    double tau = 0.0;
};

/// finite_lambda(mean ratio) when every eps/tau is within 1% of the mean;
/// bv_infinity when, ordered by decreasing eps, the ratios increase strictly and
/// the fitted growth tau ~ eps^p has p >= 1.1. Anything else is AmbiguousRegime.
[[nodiscard]] Regime classify_regime(std::span<const SweepPoint> sweep);

}  // namespace mmflow
