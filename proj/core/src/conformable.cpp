#include "fracbateman/conformable.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fracbateman {

FractionalOrder::FractionalOrder(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw std::domain_error("fractional order must satisfy 0 < alpha <= 1, got " +
                                std::to_string(alpha));
    }
}

Grid1D::Grid1D(std::vector<double> points) : points_(std::move(points)) {
    if (points_.size() < 3) {
        throw std::invalid_argument("grid needs at least 3 points");
    }
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!std::isfinite(points_[i])) {
            throw std::invalid_argument("grid point is not finite");
        }
        if (i > 0 && !(points_[i] > points_[i - 1])) {
            throw std::invalid_argument("grid points must be strictly increasing");
        }
    }
    if (points_.front() < kMinGridCoordinate) {
        throw std::domain_error("grid points must be positive (>= " +
                                std::to_string(kMinGridCoordinate) + ")");
    }
}

Grid1D Grid1D::uniform(double min, double max, std::size_t count) {
    if (count < 3) {
        throw std::invalid_argument("grid needs at least 3 points");
    }
    if (!(max > min)) {
        throw std::invalid_argument("grid range must satisfy min < max");
    }
    std::vector<double> pts(count);
    const double step = (max - min) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        pts[i] = min + step * static_cast<double>(i);
    }
    pts.back() = max;
    return Grid1D(std::move(pts));
}

SampledField::SampledField(Grid1D grid, std::vector<complex> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != grid_.size()) {
        throw std::invalid_argument("field value count does not match grid size");
    }
    for (const complex& v : values_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw std::domain_error("field values must be finite");
        }
    }
}

SampledField SampledField::sample(const Grid1D& grid, const std::function<complex(double)>& f) {
    std::vector<complex> values;
    values.reserve(grid.size());
    for (double s : grid.points()) {
        values.push_back(f(s));
    }
    return SampledField(grid, std::move(values));
}

SampledField SampledField::sample_real(const Grid1D& grid,
                                       const std::function<double(double)>& f) {
    return sample(grid, [&](double s) { return complex(f(s), 0.0); });
}

double SampledField::sup_norm() const noexcept {
    double m = 0.0;
    for (const complex& v : values_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

namespace {

template <class Op>
SampledField zip(const SampledField& lhs, const SampledField& rhs, Op op) {
    if (!(lhs.grid() == rhs.grid())) {
        throw std::invalid_argument("fields live on different grids");
    }
    std::vector<complex> out(lhs.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = op(lhs[i], rhs[i]);
    }
    return SampledField(lhs.grid(), std::move(out));
}

} // namespace

SampledField operator+(const SampledField& lhs, const SampledField& rhs) {
    return zip(lhs, rhs, std::plus<>{});
}

SampledField operator-(const SampledField& lhs, const SampledField& rhs) {
    return zip(lhs, rhs, std::minus<>{});
}

SampledField operator*(const SampledField& lhs, const SampledField& rhs) {
    return zip(lhs, rhs, std::multiplies<>{});
}

SampledField operator*(complex scale, const SampledField& field) {
    std::vector<complex> out(field.values().begin(), field.values().end());
    for (complex& v : out) {
        v *= scale;
    }
    return SampledField(field.grid(), std::move(out));
}

std::vector<double> fd_weights(double x0, std::span<const double> nodes, int derivative_order) {
    // Fornberg (1988), "Generation of finite difference formulas on arbitrarily
    // spaced grids". c[k][j] is the weight of node j for the k-th derivative.
    const int n = static_cast<int>(nodes.size()) - 1;
    const int m = derivative_order;
    if (m < 0 || n < m) {
        throw std::invalid_argument("stencil too small for requested derivative order");
    }
    std::vector<std::vector<double>> c(m + 1, std::vector<double>(n + 1, 0.0));
    c[0][0] = 1.0;
    double c1 = 1.0;
    double c4 = nodes[0] - x0;
    for (int i = 1; i <= n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = nodes[i] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = nodes[i] - nodes[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k) {
                    c[k][i] = c1 * (k * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
                }
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for (int k = mn; k >= 1; --k) {
                c[k][j] = (c4 * c[k][j] - k * c[k - 1][j]) / c3;
            }
            c[0][j] = c4 * c[0][j] / c3;
        }
        c1 = c2;
    }
    return c[m];
}

SampledField finite_difference(const SampledField& f, int derivative_order) {
    if (derivative_order != 1 && derivative_order != 2) {
        throw std::invalid_argument("only first and second derivatives are supported");
    }
    const auto x = f.grid().points();
    const std::size_t n = x.size();
    const std::size_t min_nodes = derivative_order == 1 ? 3 : 4;
    if (n < min_nodes) {
        throw std::invalid_argument("grid too small for finite difference");
    }
    // One-sided closures use order+3 nodes (third order) when the grid allows,
    // order+2 (second order) otherwise; the interior stencil stays O(h^2).
    const std::size_t edge = std::min(n, static_cast<std::size_t>(derivative_order) + 3);

    std::vector<complex> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t first = 0;
        std::size_t count = 3;
        if (i == 0) {
            first = 0;
            count = edge;
        } else if (i == n - 1) {
            first = n - edge;
            count = edge;
        } else {
            first = i - 1;
        }
        const auto w = fd_weights(x[i], x.subspan(first, count), derivative_order);
        complex acc = 0.0;
        for (std::size_t k = 0; k < count; ++k) {
            acc += w[k] * f[first + k];
        }
        out[i] = acc;
    }
    return SampledField(f.grid(), std::move(out));
}

SampledField conformable_derivative(const SampledField& f, FractionalOrder order) {
    const SampledField df = finite_difference(f, 1);
    const double a = order.value();
    std::vector<complex> out(f.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double s = f.grid()[i];
        out[i] = (a == 1.0 ? 1.0 : std::pow(s, 1.0 - a)) * df[i];
    }
    return SampledField(f.grid(), std::move(out));
}

SampledField conformable_second_derivative(const SampledField& f, FractionalOrder order) {
    if (f.size() < 5) {
        throw std::invalid_argument("conformable second derivative needs at least 5 points");
    }
    const SampledField df = finite_difference(f, 1);
    const SampledField d2f = finite_difference(f, 2);
    const double a = order.value();
    std::vector<complex> out(f.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double s = f.grid()[i];
        out[i] = (1.0 - a) * std::pow(s, 1.0 - 2.0 * a) * df[i] +
                 std::pow(s, 2.0 - 2.0 * a) * d2f[i];
    }
    return SampledField(f.grid(), std::move(out));
}

double conformable_exp(double rate, FractionalOrder order, double t) {
    if (!(t > 0.0)) {
        throw std::domain_error("conformable exponential is defined for t > 0");
    }
    const double a = order.value();
    return std::exp(rate * std::pow(t, a) / a);
}

} // namespace fracbateman
