#include "fracbateman/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracbateman {

namespace {

// Kronrod abscissae on [-1, 1]; odd indices are the Gauss-7 nodes.
constexpr std::array<double, 8> kXk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

double checked(const std::function<double(double)>& f, double x) {
    const double v = f(x);
    if (!std::isfinite(v)) {
        throw std::domain_error("integrand is not finite at x = " + std::to_string(x));
    }
    return v;
}

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = checked(f, center);
    double kronrod = fc * kWk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXk[j];
        const double sum = checked(f, center - dx) + checked(f, center + dx);
        kronrod += kWk[j] * sum;
        if (j % 2 == 1) {
            gauss += kWg[j / 2] * sum;
        }
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

double peak_estimate(const std::function<double(double)>& f, double y_max) {
    double peak = 0.0;
    constexpr int samples = 256;
    for (int i = 1; i <= samples; ++i) {
        peak = std::max(peak, std::abs(checked(f, y_max * i / samples)));
    }
    return peak;
}

// |f| near the cutoff, over its last eighth, relative to the running peak.
bool negligible_at(const std::function<double(double)>& f, double y_max, double threshold) {
    for (double s : {0.875, 0.9375, 1.0}) {
        if (std::abs(checked(f, s * y_max)) >= threshold) {
            return false;
        }
    }
    return true;
}

} // namespace

void QuadratureSpec::validate() const {
    if (!(rel_tol > 0.0 && rel_tol <= 1e-2)) {
        throw std::invalid_argument("quadrature tolerance must lie in (0, 1e-2]");
    }
    if (!(y_max >= 0.0) || !std::isfinite(y_max)) {
        throw std::invalid_argument("quadrature cutoff must be nonnegative");
    }
    if (max_subdivisions < 1) {
        throw std::invalid_argument("quadrature needs at least one subdivision");
    }
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol, int max_subdivisions) {
    if (!(b > a)) {
        throw std::invalid_argument("integration interval must satisfy a < b");
    }
    std::priority_queue<Panel> panels;
    Panel first = gauss_kronrod(f, a, b);
    double total = first.value;
    double error = first.error;
    panels.push(first);
    int intervals = 1;
    // absolute floor so integrals that vanish exactly still terminate
    constexpr double abs_floor = 1e-300;
    while (error > std::max(abs_floor, rel_tol * std::abs(total))) {
        if (intervals >= max_subdivisions) {
            throw std::runtime_error("adaptive quadrature did not converge within " +
                                     std::to_string(max_subdivisions) + " subdivisions");
        }
        const Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            throw std::runtime_error("adaptive quadrature reached machine resolution");
        }
        const Panel left = gauss_kronrod(f, worst.a, mid);
        const Panel right = gauss_kronrod(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++intervals;
    }
    // re-sum to shed the drift of the running updates
    total = 0.0;
    error = 0.0;
    while (!panels.empty()) {
        total += panels.top().value;
        error += panels.top().error;
        panels.pop();
    }
    return {total, error, intervals};
}

double integrate_halfline(const std::function<double(double)>& f, const QuadratureSpec& spec) {
    spec.validate();
    double y_max = spec.y_max;
    if (y_max > 0.0) {
        const double peak = peak_estimate(f, y_max);
        if (!negligible_at(f, y_max, spec.rel_tol * peak)) {
            throw std::domain_error("integrand is not negligible at the requested cutoff");
        }
    } else {
        y_max = 1.0;
        double peak = peak_estimate(f, y_max);
        while (!negligible_at(f, y_max, spec.rel_tol * peak)) {
            y_max *= 2.0;
            if (y_max > 1e8) {
                throw std::runtime_error("integrand does not decay on the half-line");
            }
            peak = std::max(peak, peak_estimate(f, y_max));
        }
    }
    for (;;) {
        const QuadratureResult body = integrate(f, 0.0, y_max, spec.rel_tol, spec.max_subdivisions);
        const QuadratureResult tail =
            integrate(f, y_max, 2.0 * y_max, spec.rel_tol, spec.max_subdivisions);
        if (std::abs(tail.value) <= spec.rel_tol * std::abs(body.value)) {
            return body.value + tail.value;
        }
        if (spec.y_max > 0.0) {
            throw std::domain_error("tail beyond the requested cutoff is not negligible");
        }
        y_max *= 2.0;
        if (y_max > 1e8) {
            throw std::runtime_error("integrand does not decay on the half-line");
        }
    }
}

} // namespace fracbateman
