#pragma once

#include <functional>

namespace fracbateman {

struct QuadratureSpec {
    /// Relative tolerance, in (0, 1e-2].
    double rel_tol = 1e-10;
    /// Upper cutoff of the main interval; 0 selects it automatically by
    /// doubling until the integrand is below rel_tol times its peak.
    double y_max = 0.0;
    /// Interval budget of the adaptive bisection.
    int max_subdivisions = 4000;

    void validate() const;
};

struct QuadratureResult {
    double value;
    double error_estimate;
    int intervals;
};

/// Adaptive 7/15-point Gauss-Kronrod on [a, b] with global bisection of the
/// worst interval. Throws std::runtime_error on non-convergence and
/// std::domain_error if f returns NaN or infinity.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol, int max_subdivisions);

/// Integral over (0, inf): adaptive quadrature on (0, y_max] plus a tail
/// estimate on [y_max, 2 y_max] that must itself be below tolerance.
double integrate_halfline(const std::function<double(double)>& f, const QuadratureSpec& spec = {});

} // namespace fracbateman
