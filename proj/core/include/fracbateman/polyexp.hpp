#pragma once

// Exact algebra on sums of c * y^p * exp(a * y^q).
//
// The class is closed under d/dy, under the conformable derivative
// y^(1-a) d/dy, and under multiplication within one exponential family,
// which is all the Rodriguez-type eigenfunction construction needs.

#include <span>
#include <string>
#include <vector>

#include "fracbateman/conformable.hpp"

namespace fracbateman {

/// c * y^power * exp(exp_coeff * y^exp_power), exp_power > 0.
struct PolyExpTerm {
    complex coeff{0.0};
    double power = 0.0;
    double exp_coeff = 0.0;
    double exp_power = 1.0;

    friend bool operator==(const PolyExpTerm&, const PolyExpTerm&) = default;
};

/// Relative size below which a merged coefficient is treated as cancelled.
inline constexpr double kMergeTolerance = 1e-14;

/// A canonical sum of PolyExpTerm. Terms with identical (power, exp_coeff,
/// exp_power) are merged, cancelled terms dropped, and terms with
/// exp_coeff == 0 carry exp_power == 1. The empty sum is zero.
class PolyExpSum {
public:
    PolyExpSum() = default;
    explicit PolyExpSum(std::vector<PolyExpTerm> terms);

    static PolyExpSum term(complex coeff, double power, double exp_coeff = 0.0,
                           double exp_power = 1.0);
    static PolyExpSum constant(complex value) { return term(value, 0.0); }

    std::span<const PolyExpTerm> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficient of the term with the given power and exponential family,
    /// zero if absent. Powers match within `power_tol`.
    complex coefficient(double power, double exp_coeff = 0.0, double exp_power = 1.0,
                        double power_tol = 0.0) const;

    complex operator()(double y) const;

    friend PolyExpSum operator+(const PolyExpSum& lhs, const PolyExpSum& rhs);
    friend PolyExpSum operator-(const PolyExpSum& lhs, const PolyExpSum& rhs);
    friend PolyExpSum operator*(complex scale, const PolyExpSum& expr);

    friend bool operator==(const PolyExpSum&, const PolyExpSum&) = default;

private:
    std::vector<PolyExpTerm> terms_;
};

/// Numerical value at y. y must be > 0, or == 0 when every power is a
/// nonnegative integer.
complex evaluate(const PolyExpSum& expr, double y);

/// Exact d/dy.
PolyExpSum differentiate(const PolyExpSum& expr);

/// n-fold d/dy, merging after every step. n == 0 is the identity.
PolyExpSum differentiate_n(const PolyExpSum& expr, int n);

/// Exact y^(1-a) d/dy.
PolyExpSum conformable_diff(const PolyExpSum& expr, FractionalOrder order);

/// Termwise product. Each pair of terms must share exp_power unless one of
/// them has exp_coeff == 0; throws std::invalid_argument otherwise.
PolyExpSum multiply(const PolyExpSum& lhs, const PolyExpSum& rhs);

/// Complex conjugate (exponents are real, so only coefficients change).
PolyExpSum conj(const PolyExpSum& expr);

/// "c * y^p * exp(a*y^q)" clauses joined by " + "; "0" for the empty sum.
std::string to_string(const PolyExpSum& expr);

} // namespace fracbateman
