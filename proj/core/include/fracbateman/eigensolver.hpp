#pragma once

#include <cstddef>
#include <vector>

namespace fracbateman {

/// Real symmetric tridiagonal matrix. offdiag[i] couples rows i and i+1.
struct SymmetricTridiagonal {
    std::vector<double> diag;
    std::vector<double> offdiag;

    std::size_t size() const noexcept { return diag.size(); }
};

/// Number of eigenvalues strictly below x (Sturm sequence / LDL^T inertia).
std::size_t sturm_count(const SymmetricTridiagonal& m, double x);

/// The `count` smallest eigenvalues in ascending order, each isolated by
/// bisection on the Sturm count.
std::vector<double> lowest_eigenvalues(const SymmetricTridiagonal& m, std::size_t count);

} // namespace fracbateman
