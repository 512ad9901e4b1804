#pragma once

#include "mmflow/types.hpp"

#include <json.hpp>

#include <memory>
#include <string>
#include <vector>

namespace YAML {
class Node;
}

namespace mmflow {

/// Time-dependent energy F(t, x) on [0, T] x R^n together with its partial
/// derivatives. Implementations must be pure: every method is const and may be
/// called concurrently.
class EnergyModel {
public:
    EnergyModel(int dim, double horizon, Box box);
    virtual ~EnergyModel() = default;

    EnergyModel(const EnergyModel&) = default;
    EnergyModel& operator=(const EnergyModel&) = default;

    [[nodiscard]] int dim() const noexcept { return dim_; }
    [[nodiscard]] double horizon() const noexcept { return horizon_; }
    [[nodiscard]] const Box& working_box() const noexcept { return box_; }
    void set_working_box(Box box);

    [[nodiscard]] virtual std::string kind() const = 0;
    [[nodiscard]] virtual double value(double t, const Point& x) const = 0;
    [[nodiscard]] virtual Point gradient(double t, const Point& x) const = 0;
    [[nodiscard]] virtual double time_derivative(double t, const Point& x) const = 0;
    /// Hessian in x. The default is a central difference of `gradient`.
    [[nodiscard]] virtual Matrix hessian(double t, const Point& x) const;
    /// Parameters, for run metadata.
    [[nodiscard]] virtual nlohmann::json describe() const;

private:
    int dim_;
    double horizon_;
    Box box_;
};

using ModelPtr = std::shared_ptr<const EnergyModel>;

// Checked evaluation: these throw Error(NonFinite) when the result overflows.
[[nodiscard]] double evaluate(const EnergyModel& model, double t, const Point& x);
[[nodiscard]] Point gradient(const EnergyModel& model, double t, const Point& x);
[[nodiscard]] double time_derivative(const EnergyModel& model, double t, const Point& x);

/// F(t,u) = 1/4 (u^2 - 1)^2 - (a t + b) u. The default load (a, b) = (1, -1)
/// gives the classical tilted double well on [0, 2].
class DoubleWell final : public EnergyModel {
public:
    explicit DoubleWell(double horizon = 2.0, double load_slope = 1.0, double load_offset = -1.0,
                        Box box = default_box());
    static Box default_box();

    [[nodiscard]] std::string kind() const override { return "double_well"; }
    [[nodiscard]] double value(double t, const Point& x) const override;
    [[nodiscard]] Point gradient(double t, const Point& x) const override;
    [[nodiscard]] double time_derivative(double t, const Point& x) const override;
    [[nodiscard]] Matrix hessian(double t, const Point& x) const override;
    [[nodiscard]] nlohmann::json describe() const override;

private:
    double slope_;
    double offset_;
};

/// F(t,x) = k/2 |x|^2 - <l0 + t l1, x>.
class Quadratic final : public EnergyModel {
public:
    Quadratic(Point load_offset, Point load_slope, double horizon, Box box, double stiffness = 1.0);

    [[nodiscard]] std::string kind() const override { return "quadratic"; }
    [[nodiscard]] double value(double t, const Point& x) const override;
    [[nodiscard]] Point gradient(double t, const Point& x) const override;
    [[nodiscard]] double time_derivative(double t, const Point& x) const override;
    [[nodiscard]] Matrix hessian(double t, const Point& x) const override;
    [[nodiscard]] nlohmann::json describe() const override;

    [[nodiscard]] Point load(double t) const { return offset_ + t * slope_; }
    [[nodiscard]] double stiffness() const noexcept { return stiffness_; }

private:
    Point offset_;
    Point slope_;
    double stiffness_;
};

/// Finite-difference discretization of the 1-D elastic bar energy with a
/// double-well bulk term: n interior nodes, spacing h = 1/(n+1),
///   F(t,u) = sum_{i=0}^{n} (u_{i+1}-u_i)^2 / (2h) + sum_{i=1}^{n} h (W(u_i) - l(t) u_i),
/// W(u) = (u^2-1)^2/4, l(t) = l0 + l1 t, clamped ends u_0 = left, u_{n+1} = right.
class ElasticChain final : public EnergyModel {
public:
    ElasticChain(int nodes, double load_offset, double load_slope, double horizon, Box box,
                 double left = 0.0, double right = 0.0);

    [[nodiscard]] std::string kind() const override { return "elastic_chain"; }
    [[nodiscard]] double value(double t, const Point& x) const override;
    [[nodiscard]] Point gradient(double t, const Point& x) const override;
    [[nodiscard]] double time_derivative(double t, const Point& x) const override;
    [[nodiscard]] Matrix hessian(double t, const Point& x) const override;
    [[nodiscard]] nlohmann::json describe() const override;

    [[nodiscard]] double spacing() const noexcept { return h_; }

private:
    double h_;
    double load_offset_;
    double load_slope_;
    double left_;
    double right_;
};

/// Sum of monomials c * t^p * prod_i x_i^{e_i}.
struct Monomial {
    double coefficient = 0.0;
    int time_power = 0;
    std::vector<int> exponents;
};

class PolynomialEnergy final : public EnergyModel {
public:
    PolynomialEnergy(int dim, std::vector<Monomial> terms, double horizon, Box box);

    [[nodiscard]] std::string kind() const override { return "polynomial"; }
    [[nodiscard]] double value(double t, const Point& x) const override;
    [[nodiscard]] Point gradient(double t, const Point& x) const override;
    [[nodiscard]] double time_derivative(double t, const Point& x) const override;
    [[nodiscard]] Matrix hessian(double t, const Point& x) const override;
    [[nodiscard]] nlohmann::json describe() const override;

private:
    std::vector<Monomial> terms_;
};

/// Builds a model from a `model:` config section (see docs/config.md).
[[nodiscard]] ModelPtr model_from_config(const YAML::Node& node);

/// Central-difference helpers, step h = 1e-5 (1 + |x|).
[[nodiscard]] Point fd_gradient(const EnergyModel& model, double t, const Point& x);
[[nodiscard]] double fd_time_derivative(const EnergyModel& model, double t, const Point& x);

}  // namespace mmflow
