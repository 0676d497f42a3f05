#pragma once

// Conformable derivative operators on sampled fields, plus the small value
// types (order, grid, field) the rest of the library is built on.
//
// The operational definition used throughout is D^a f(s) = s^(1-a) f'(s)
// for s > 0, with
//   D^a D^a f(s) = (1-a) s^(1-2a) f'(s) + s^(2-2a) f''(s).

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace fracbateman {

using complex = std::complex<double>;

/// Order a of a conformable derivative, restricted to 0 < a <= 1.
class FractionalOrder {
public:
    explicit FractionalOrder(double alpha);

    double value() const noexcept { return alpha_; }

    friend bool operator==(const FractionalOrder&, const FractionalOrder&) = default;

private:
    double alpha_;
};

/// Smallest coordinate a Grid1D may hold; keeps s^(1-2a) finite.
inline constexpr double kMinGridCoordinate = 1e-6;

/// Strictly increasing, strictly positive nodes (at least three).
/// Spacing may be non-uniform.
class Grid1D {
public:
    explicit Grid1D(std::vector<double> points);

    /// `count` equally spaced nodes on [min, max].
    static Grid1D uniform(double min, double max, std::size_t count);

    std::span<const double> points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    double operator[](std::size_t i) const noexcept { return points_[i]; }
    double front() const noexcept { return points_.front(); }
    double back() const noexcept { return points_.back(); }

    friend bool operator==(const Grid1D&, const Grid1D&) = default;

private:
    std::vector<double> points_;
};

/// Complex values on a Grid1D, one per node, all finite.
class SampledField {
public:
    SampledField(Grid1D grid, std::vector<complex> values);

    static SampledField sample(const Grid1D& grid, const std::function<complex(double)>& f);
    static SampledField sample_real(const Grid1D& grid, const std::function<double(double)>& f);

    const Grid1D& grid() const noexcept { return grid_; }
    std::span<const complex> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    complex operator[](std::size_t i) const noexcept { return values_[i]; }

    /// Largest |value|.
    double sup_norm() const noexcept;

    friend SampledField operator+(const SampledField& lhs, const SampledField& rhs);
    friend SampledField operator-(const SampledField& lhs, const SampledField& rhs);
    /// Pointwise product.
    friend SampledField operator*(const SampledField& lhs, const SampledField& rhs);
    friend SampledField operator*(complex scale, const SampledField& field);

private:
    Grid1D grid_;
    std::vector<complex> values_;
};

/// Finite-difference weights for the `derivative_order`-th derivative at x0
/// from values at `nodes` (Fornberg's recursion, arbitrary spacing).
std::vector<double> fd_weights(double x0, std::span<const double> nodes, int derivative_order);

/// Ordinary first or second derivative of a sampled field. Interior nodes use
/// the three-point stencil; endpoints use one-sided stencils of one order
/// higher (falling back to second order on very short grids).
SampledField finite_difference(const SampledField& f, int derivative_order);

/// s^(1-a) f'(s). Needs at least 3 nodes.
SampledField conformable_derivative(const SampledField& f, FractionalOrder order);

/// (1-a) s^(1-2a) f' + s^(2-2a) f''. Needs at least 5 nodes.
SampledField conformable_second_derivative(const SampledField& f, FractionalOrder order);

/// e^(rate * t^a / a), the conformable exponential. D^a of it is rate times itself.
double conformable_exp(double rate, FractionalOrder order, double t);

} // namespace fracbateman
