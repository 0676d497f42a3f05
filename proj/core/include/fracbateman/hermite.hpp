#pragma once

#include <vector>

namespace fracbateman {

/// Largest supported Hermite degree.
inline constexpr int kMaxHermiteDegree = 50;

/// Physicists' Hermite polynomial H_n(x) via H_{k+1} = 2x H_k - 2k H_{k-1}.
double hermite(int n, double x);

/// H_n(x) and H_{n-1}(x) in one recurrence sweep (H_{-1} is taken as 0).
struct HermitePair {
    double current;
    double previous;
};
HermitePair hermite_pair(int n, double x);

/// Monomial coefficients of H_n, index k holding the x^k coefficient.
std::vector<double> hermite_coefficients(int n);

} // namespace fracbateman
