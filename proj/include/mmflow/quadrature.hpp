#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace mmflow {

/// Adaptive Gauss-Kronrod (15 points) integral of f over [a, b].
template <typename F>
[[nodiscard]] double integrate(F&& f, double a, double b, double tol = 1e-10) {
    if (a == b) return 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 12, tol);
}

}  // namespace mmflow
