#include "fracbateman/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fracbateman {

std::size_t sturm_count(const SymmetricTridiagonal& m, double x) {
    const std::size_t n = m.size();
    const double tiny = std::numeric_limits<double>::min();
    std::size_t negatives = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double coupling = i == 0 ? 0.0 : m.offdiag[i - 1] * m.offdiag[i - 1] / q;
        q = m.diag[i] - x - coupling;
        if (q == 0.0) {
            q = -tiny;
        }
        if (q < 0.0) {
            ++negatives;
        }
    }
    return negatives;
}

std::vector<double> lowest_eigenvalues(const SymmetricTridiagonal& m, std::size_t count) {
    const std::size_t n = m.size();
    if (n == 0 || m.offdiag.size() + 1 != n) {
        throw std::invalid_argument("malformed tridiagonal matrix");
    }
    if (count > n) {
        throw std::invalid_argument("requested more eigenvalues than the matrix dimension");
    }
    // Gershgorin bounds
    double lo = std::numeric_limits<double>::max();
    double hi = std::numeric_limits<double>::lowest();
    for (std::size_t i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(m.offdiag[i - 1]) : 0.0) +
                         (i + 1 < n ? std::abs(m.offdiag[i]) : 0.0);
        lo = std::min(lo, m.diag[i] - r);
        hi = std::max(hi, m.diag[i] + r);
    }
    const double eps = std::numeric_limits<double>::epsilon();

    std::vector<double> out;
    out.reserve(count);
    double floor = lo;
    for (std::size_t k = 0; k < count; ++k) {
        double a = floor;
        double b = hi;
        int iterations = 0;
        while (b - a > 2.0 * eps * std::max({std::abs(a), std::abs(b), 1e-300})) {
            const double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b) {
                break;
            }
            if (sturm_count(m, mid) > k) {
                b = mid;
            } else {
                a = mid;
            }
            if (++iterations > 2000) {
                throw std::runtime_error("Sturm bisection did not converge");
            }
        }
        const double value = 0.5 * (a + b);
        out.push_back(value);
        floor = a;
    }
    return out;
}

} // namespace fracbateman
