#include "fracbateman/hermite.hpp"

#include <stdexcept>
#include <string>

namespace fracbateman {

namespace {

void check_degree(int n) {
    if (n < 0 || n > kMaxHermiteDegree) {
        throw std::invalid_argument("Hermite degree must lie in [0, " +
                                    std::to_string(kMaxHermiteDegree) + "], got " +
                                    std::to_string(n));
    }
}

} // namespace

HermitePair hermite_pair(int n, double x) {
    check_degree(n);
    double prev = 0.0;
    double cur = 1.0;
    for (int k = 0; k < n; ++k) {
        const double next = 2.0 * x * cur - 2.0 * k * prev;
        prev = cur;
        cur = next;
    }
    return {cur, prev};
}

double hermite(int n, double x) { return hermite_pair(n, x).current; }

std::vector<double> hermite_coefficients(int n) {
    check_degree(n);
    std::vector<double> prev;
    std::vector<double> cur{1.0};
    for (int k = 0; k < n; ++k) {
        std::vector<double> next(cur.size() + 1, 0.0);
        for (std::size_t j = 0; j < cur.size(); ++j) {
            next[j + 1] += 2.0 * cur[j];
        }
        for (std::size_t j = 0; j < prev.size(); ++j) {
            next[j] -= 2.0 * k * prev[j];
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

} // namespace fracbateman
