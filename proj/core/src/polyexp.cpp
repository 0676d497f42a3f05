#include "fracbateman/polyexp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <tuple>

namespace fracbateman {

namespace {

auto family_key(const PolyExpTerm& t) {
    return std::make_tuple(t.exp_power, t.exp_coeff, t.power);
}

// Powers reached through different differentiation orders, e.g. (p-1)+q-1 and
// (p+q-1)-1, can differ in the last bit; they name the same monomial.
constexpr double kPowerTolerance = 1e-12;

bool same_slot(const PolyExpTerm& a, const PolyExpTerm& b) {
    return a.exp_power == b.exp_power && a.exp_coeff == b.exp_coeff &&
           std::abs(a.power - b.power) <= kPowerTolerance * std::max(1.0, std::abs(a.power));
}

std::vector<PolyExpTerm> canonicalize(std::vector<PolyExpTerm> terms) {
    for (PolyExpTerm& t : terms) {
        if (!std::isfinite(t.coeff.real()) || !std::isfinite(t.coeff.imag())) {
            throw std::domain_error("polyexp coefficient must be finite");
        }
        if (!std::isfinite(t.power) || !std::isfinite(t.exp_coeff)) {
            throw std::domain_error("polyexp powers must be finite");
        }
        if (std::abs(t.power) <= kPowerTolerance) {
            t.power = 0.0;
        }
        if (t.exp_coeff == 0.0) {
            t.exp_power = 1.0;
        } else if (!(t.exp_power > 0.0)) {
            throw std::domain_error("polyexp exponential power must be positive");
        }
    }
    std::sort(terms.begin(), terms.end(), [](const PolyExpTerm& a, const PolyExpTerm& b) {
        return family_key(a) < family_key(b);
    });

    std::vector<PolyExpTerm> out;
    out.reserve(terms.size());
    std::size_t i = 0;
    while (i < terms.size()) {
        PolyExpTerm merged = terms[i];
        double scale = std::abs(terms[i].coeff);
        std::size_t j = i + 1;
        while (j < terms.size() && same_slot(terms[j], merged)) {
            merged.coeff += terms[j].coeff;
            scale = std::max(scale, std::abs(terms[j].coeff));
            ++j;
        }
        if (merged.coeff != 0.0 && std::abs(merged.coeff) > kMergeTolerance * scale) {
            out.push_back(merged);
        }
        i = j;
    }
    return out;
}

bool is_nonnegative_integer(double p) { return p >= 0.0 && std::floor(p) == p; }

// y^p with the y^0 == 1 convention at the origin.
double power_of(double y, double p) {
    if (p == 0.0) {
        return 1.0;
    }
    if (is_nonnegative_integer(p) && p <= 64.0) {
        double r = 1.0;
        for (int k = 0; k < static_cast<int>(p); ++k) {
            r *= y;
        }
        return r;
    }
    return std::pow(y, p);
}

std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

PolyExpSum::PolyExpSum(std::vector<PolyExpTerm> terms) : terms_(canonicalize(std::move(terms))) {}

PolyExpSum PolyExpSum::term(complex coeff, double power, double exp_coeff, double exp_power) {
    return PolyExpSum({PolyExpTerm{coeff, power, exp_coeff, exp_power}});
}

complex PolyExpSum::coefficient(double power, double exp_coeff, double exp_power,
                                double power_tol) const {
    if (exp_coeff == 0.0) {
        exp_power = 1.0;
    }
    for (const PolyExpTerm& t : terms_) {
        if (t.exp_coeff == exp_coeff && t.exp_power == exp_power &&
            std::abs(t.power - power) <= power_tol) {
            return t.coeff;
        }
    }
    return 0.0;
}

complex PolyExpSum::operator()(double y) const { return evaluate(*this, y); }

PolyExpSum operator+(const PolyExpSum& lhs, const PolyExpSum& rhs) {
    std::vector<PolyExpTerm> all(lhs.terms_.begin(), lhs.terms_.end());
    all.insert(all.end(), rhs.terms_.begin(), rhs.terms_.end());
    return PolyExpSum(std::move(all));
}

PolyExpSum operator-(const PolyExpSum& lhs, const PolyExpSum& rhs) {
    return lhs + complex(-1.0) * rhs;
}

PolyExpSum operator*(complex scale, const PolyExpSum& expr) {
    std::vector<PolyExpTerm> out(expr.terms_.begin(), expr.terms_.end());
    for (PolyExpTerm& t : out) {
        t.coeff *= scale;
    }
    return PolyExpSum(std::move(out));
}

complex evaluate(const PolyExpSum& expr, double y) {
    if (y < 0.0) {
        throw std::domain_error("polyexp evaluation requires y >= 0");
    }
    if (y == 0.0) {
        for (const PolyExpTerm& t : expr.terms()) {
            if (!is_nonnegative_integer(t.power)) {
                throw std::domain_error(
                    "polyexp evaluation at y = 0 with a negative or fractional power");
            }
        }
    }
    complex sum = 0.0;
    for (const PolyExpTerm& t : expr.terms()) {
        double v = power_of(y, t.power);
        if (t.exp_coeff != 0.0) {
            v *= std::exp(t.exp_coeff * power_of(y, t.exp_power));
        }
        sum += t.coeff * v;
    }
    return sum;
}

PolyExpSum differentiate(const PolyExpSum& expr) {
    std::vector<PolyExpTerm> out;
    out.reserve(2 * expr.size());
    for (const PolyExpTerm& t : expr.terms()) {
        if (t.power != 0.0) {
            out.push_back({t.coeff * t.power, t.power - 1.0, t.exp_coeff, t.exp_power});
        }
        if (t.exp_coeff != 0.0) {
            out.push_back({t.coeff * (t.exp_coeff * t.exp_power), t.power + t.exp_power - 1.0,
                           t.exp_coeff, t.exp_power});
        }
    }
    return PolyExpSum(std::move(out));
}

PolyExpSum differentiate_n(const PolyExpSum& expr, int n) {
    if (n < 0) {
        throw std::invalid_argument("derivative count must be nonnegative");
    }
    PolyExpSum result = expr;
    for (int k = 0; k < n; ++k) {
        result = differentiate(result);
    }
    return result;
}

PolyExpSum conformable_diff(const PolyExpSum& expr, FractionalOrder order) {
    const double a = order.value();
    std::vector<PolyExpTerm> out;
    out.reserve(2 * expr.size());
    for (const PolyExpTerm& t : expr.terms()) {
        if (t.power != 0.0) {
            out.push_back({t.coeff * t.power, t.power - a, t.exp_coeff, t.exp_power});
        }
        if (t.exp_coeff != 0.0) {
            out.push_back({t.coeff * (t.exp_coeff * t.exp_power),
                           t.power + t.exp_power - a, t.exp_coeff, t.exp_power});
        }
    }
    return PolyExpSum(std::move(out));
}

PolyExpSum multiply(const PolyExpSum& lhs, const PolyExpSum& rhs) {
    std::vector<PolyExpTerm> out;
    out.reserve(lhs.size() * rhs.size());
    for (const PolyExpTerm& a : lhs.terms()) {
        for (const PolyExpTerm& b : rhs.terms()) {
            double q = 1.0;
            if (a.exp_coeff != 0.0 && b.exp_coeff != 0.0) {
                if (a.exp_power != b.exp_power) {
                    throw std::invalid_argument(
                        "cannot multiply polyexp terms from different exponential families");
                }
                q = a.exp_power;
            } else if (a.exp_coeff != 0.0) {
                q = a.exp_power;
            } else if (b.exp_coeff != 0.0) {
                q = b.exp_power;
            }
            out.push_back({a.coeff * b.coeff, a.power + b.power, a.exp_coeff + b.exp_coeff, q});
        }
    }
    return PolyExpSum(std::move(out));
}

PolyExpSum conj(const PolyExpSum& expr) {
    std::vector<PolyExpTerm> out(expr.terms().begin(), expr.terms().end());
    for (PolyExpTerm& t : out) {
        t.coeff = std::conj(t.coeff);
    }
    return PolyExpSum(std::move(out));
}

std::string to_string(const PolyExpSum& expr) {
    if (expr.is_zero()) {
        return "0";
    }
    std::string out;
    for (const PolyExpTerm& t : expr.terms()) {
        if (!out.empty()) {
            out += " + ";
        }
        if (t.coeff.imag() == 0.0) {
            out += format_real(t.coeff.real());
        } else {
            out += "(" + format_real(t.coeff.real()) + "," + format_real(t.coeff.imag()) + ")";
        }
        out += " * y^" + format_real(t.power);
        out += " * exp(" + format_real(t.exp_coeff) + "*y^" + format_real(t.exp_power) + ")";
    }
    return out;
}

} // namespace fracbateman
