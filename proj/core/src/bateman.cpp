#include "fracbateman/bateman.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fracbateman/hermite.hpp"

namespace fracbateman {

namespace {

DerivedParams bound_state_params(const BatemanParams& p) {
    const DerivedParams d = derived_params(p);
    if (!(d.omega_sq > 0.0)) {
        throw std::domain_error(
            "normalizable states need strict underdamping (lambda < 2 omega^alpha)");
    }
    return d;
}

void check_quantum_number(int n) {
    if (n < 0) {
        throw std::invalid_argument("quantum number must be nonnegative, got " +
                                    std::to_string(n));
    }
}

} // namespace

void BatemanParams::validate() const {
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        throw std::invalid_argument("mass must be positive");
    }
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw std::invalid_argument("omega must be positive");
    }
    if (!(damping >= 0.0) || !std::isfinite(damping)) {
        throw std::invalid_argument("damping lambda must be nonnegative");
    }
    if (!(hbar > 0.0) || !std::isfinite(hbar)) {
        throw std::invalid_argument("hbar must be positive");
    }
}

double BatemanParams::mass_a() const { return std::pow(mass, alpha()); }
double BatemanParams::omega_2a() const { return std::pow(omega, 2.0 * alpha()); }
double BatemanParams::hbar_a() const { return std::pow(hbar, alpha()); }

DerivedParams derived_params(const BatemanParams& p) {
    p.validate();
    const double omega_sq = p.omega_2a() - 0.25 * p.damping * p.damping;
    if (omega_sq < 0.0) {
        throw std::domain_error("overdamped parameters: lambda > 2 omega^alpha gives a complex "
                                "spectrum (Omega^2 = " +
                                std::to_string(omega_sq) + ")");
    }
    const double omega = std::sqrt(omega_sq);
    return {omega_sq, omega, p.mass_a() / p.hbar_a() * omega};
}

double energy(const BatemanParams& p, int n) {
    check_quantum_number(n);
    const DerivedParams d = derived_params(p);
    return p.alpha() * p.hbar_a() * d.omega * (n + 0.5);
}

double drift_coefficient(KineticMode mode, FractionalOrder order) {
    return mode == KineticMode::paper ? 1.0 + order.value() : 1.0 - order.value();
}

PolyExpSum eigenfunction_paper(const BatemanParams& p, int n) {
    check_quantum_number(n);
    const DerivedParams d = bound_state_params(p);
    const double a = p.alpha();
    const double q = 2.0 * a;
    const PolyExpSum inner = PolyExpSum::term(1.0, n - a, -d.F / a, q);
    const PolyExpSum prefactor = PolyExpSum::term(1.0, a, d.F / (2.0 * a), q);
    return multiply(prefactor, differentiate_n(inner, n));
}

HermiteEigenfunction::HermiteEigenfunction(int n, double F, FractionalOrder order)
    : n_(n), scale_(std::sqrt(F / order.value())), alpha_(order.value()) {
    if (n < 0 || n > kMaxHermiteDegree) {
        throw std::invalid_argument("Hermite eigenfunction degree out of range");
    }
    if (!(F > 0.0)) {
        throw std::domain_error("Hermite eigenfunction needs F > 0");
    }
}

// u(s) = H_n(s) e^{-s^2/2}; u' = (2n H_{n-1} - s H_n) e^{-s^2/2}; u'' = (s^2 - 2n - 1) u.
HermiteEigenfunction::Jet HermiteEigenfunction::jet(double s) const {
    const HermitePair h = hermite_pair(n_, s);
    const double g = std::exp(-0.5 * s * s);
    const double u = h.current * g;
    const double du = (2.0 * n_ * h.previous - s * h.current) * g;
    const double d2u = (s * s - 2.0 * n_ - 1.0) * u;
    return {u, du, d2u};
}

double HermiteEigenfunction::operator()(double y) const {
    return jet(scale_ * std::pow(y, alpha_)).u;
}

double HermiteEigenfunction::first_derivative(double y) const {
    const double s = scale_ * std::pow(y, alpha_);
    const double ds = scale_ * alpha_ * std::pow(y, alpha_ - 1.0);
    return jet(s).du * ds;
}

double HermiteEigenfunction::second_derivative(double y) const {
    const double s = scale_ * std::pow(y, alpha_);
    const double ds = scale_ * alpha_ * std::pow(y, alpha_ - 1.0);
    const double d2s = scale_ * alpha_ * (alpha_ - 1.0) * std::pow(y, alpha_ - 2.0);
    const Jet j = jet(s);
    return j.d2u * ds * ds + j.du * d2s;
}

PolyExpSum HermiteEigenfunction::expression() const {
    const std::vector<double> coeffs = hermite_coefficients(n_);
    const double decay = -0.5 * scale_ * scale_;
    std::vector<PolyExpTerm> terms;
    double scale_pow = 1.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] != 0.0) {
            terms.push_back({coeffs[k] * scale_pow, static_cast<double>(k) * alpha_, decay,
                             2.0 * alpha_});
        }
        scale_pow *= scale_;
    }
    return PolyExpSum(std::move(terms));
}

HermiteEigenfunction eigenfunction_hermite(const BatemanParams& p, int n) {
    check_quantum_number(n);
    const DerivedParams d = bound_state_params(p);
    return HermiteEigenfunction(n, d.F, p.order);
}

complex schrodinger_residual_at(double y, complex psi, complex dpsi, complex d2psi,
                                const BatemanParams& p, double energy, KineticMode mode) {
    if (!(y > 0.0)) {
        throw std::domain_error("radial equation is evaluated at y > 0 only");
    }
    const double a = p.alpha();
    const double omega_sq = p.omega_2a() - 0.25 * p.damping * p.damping;
    const double k = 2.0 * p.mass_a() / (p.hbar_a() * p.hbar_a());
    const double potential_term =
        k * (energy * std::pow(y, 2.0 * a - 2.0) -
             0.5 * p.mass_a() * omega_sq * std::pow(y, 4.0 * a - 2.0));
    return d2psi + drift_coefficient(mode, p.order) / y * dpsi + potential_term * psi;
}

SampledField schrodinger_residual(const PolyExpSum& psi, const BatemanParams& p, double energy,
                                  KineticMode mode, const Grid1D& grid) {
    const PolyExpSum d1 = differentiate(psi);
    const PolyExpSum d2 = differentiate(d1);
    return SampledField::sample(grid, [&](double y) {
        return schrodinger_residual_at(y, evaluate(psi, y), evaluate(d1, y), evaluate(d2, y), p,
                                       energy, mode);
    });
}

SampledField schrodinger_residual(const HermiteEigenfunction& psi, const BatemanParams& p,
                                  double energy, KineticMode mode, const Grid1D& grid) {
    return SampledField::sample(grid, [&](double y) {
        return schrodinger_residual_at(y, psi(y), psi.first_derivative(y),
                                       psi.second_derivative(y), p, energy, mode);
    });
}

SampledField schrodinger_residual(const std::function<complex(double)>& psi,
                                  const BatemanParams& p, double energy, KineticMode mode,
                                  const Grid1D& grid) {
    const SampledField values = SampledField::sample(grid, psi);
    const SampledField d1 = finite_difference(values, 1);
    const SampledField d2 = finite_difference(values, 2);
    std::vector<complex> out(grid.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = schrodinger_residual_at(grid[i], values[i], d1[i], d2[i], p, energy, mode);
    }
    return SampledField(grid, std::move(out));
}

EnuSolution enu_pipeline(const BatemanParams& p, int n, KineticMode mode) {
    check_quantum_number(n);
    const DerivedParams d = bound_state_params(p);
    const double a = p.alpha();
    const double F = d.F;

    // radial equation in standard form: sigma_f = y, tau~_f = drift constant,
    // sigma~_f = k (E y^(2a) - (m^a Omega^2 / 2) y^(4a))
    const double k = 2.0 * p.mass_a() / (p.hbar_a() * p.hbar_a());
    const PolyExpSum sigma_f = PolyExpSum::term(1.0, 1.0);
    const PolyExpSum tau_tilde = PolyExpSum::constant(drift_coefficient(mode, p.order));
    const PolyExpSum half_gap = complex(0.5) * (differentiate(sigma_f) - tau_tilde);
    const double gap = half_gap.coefficient(0.0).real();

    // perfect square gap^2 - sigma~_f + G sigma_f = (A + F y^(2a))^2 with
    // G = Q y^(2a-1): constants give A^2 = gap^2, y^(4a) gives F^2 = k m^a Omega^2 / 2,
    // and y^(2a) gives Q = 2 A F + k E.
    const double A = 0.5 * a;
    if (std::abs(gap * gap - A * A) > 1e-12 * A * A) {
        throw std::logic_error("perfect-square condition fails for the constant term");
    }
    if (std::abs(F * F - 0.5 * k * p.mass_a() * d.omega_sq) > 1e-12 * F * F) {
        throw std::logic_error("perfect-square condition fails for the y^(4a) term");
    }

    // decaying branch
    const PolyExpSum pi = half_gap - (PolyExpSum::constant(A) + PolyExpSum::term(F, 2.0 * a));
    const PolyExpSum tau = tau_tilde + complex(2.0) * pi;
    const PolyExpSum h_n = complex(-0.5 * n) * differentiate(tau) -
                           complex(n * (n - 1) / 6.0) * differentiate_n(sigma_f, 2);
    const PolyExpSum dpi = differentiate(pi);

    // h = pi' + Q y^(2a-1) must equal h_n coefficientwise on y^(2a-1)
    const double power = 2.0 * a - 1.0;
    const double target = h_n.coefficient(power, 0.0, 1.0, 1e-12).real();
    const double from_pi = dpi.coefficient(power, 0.0, 1.0, 1e-12).real();
    const double e = (target - from_pi - 2.0 * A * F) / k;
    const double Q = 2.0 * A * F + k * e;
    const PolyExpSum h = dpi + PolyExpSum::term(Q, power);
    return {A, Q, pi, tau, h, h_n, e};
}

double hamiltonian_value(double y, double momentum, const BatemanParams& p, HamiltonianForm form) {
    if (!(y > 0.0)) {
        throw std::domain_error("Hamiltonian is evaluated at y > 0 only");
    }
    p.validate();
    const double a = p.alpha();
    const double kinetic = momentum * momentum / (2.0 * p.mass_a());
    const double y2a = std::pow(y, 2.0 * a);
    if (form == HamiltonianForm::gauged) {
        const double omega_sq = p.omega_2a() - 0.25 * p.damping * p.damping;
        return kinetic + 0.5 * p.mass_a() * omega_sq * y2a;
    }
    return kinetic + 0.5 * p.mass_a() * p.omega_2a() * y2a +
           0.5 * p.damping * std::pow(y, a) * momentum;
}

double gauge_kappa(const BatemanParams& p) {
    return p.mass_a() * p.damping / (4.0 * p.alpha() * p.hbar_a());
}

double gauge_residual(const PolyExpSum& test, const BatemanParams& p, const Grid1D& grid) {
    p.validate();
    const double a = p.alpha();
    const double kappa = gauge_kappa(p);
    const double shift = 0.5 * p.mass_a() * p.damping;
    const complex i(0.0, 1.0);
    const PolyExpSum dtest = differentiate(test);
    double worst = 0.0;
    for (double y : grid.points()) {
        const complex f = evaluate(test, y);
        const complex df = evaluate(dtest, y);
        const complex eta = std::exp(i * kappa * std::pow(y, 2.0 * a));
        const complex g = f / eta;
        const complex dg = (df - i * 2.0 * a * kappa * std::pow(y, 2.0 * a - 1.0) * f) / eta;
        const double lift = std::pow(y, 1.0 - a);
        const complex p_g = -i * p.hbar_a() * lift * dg;
        const complex p_f = -i * p.hbar_a() * lift * df;
        const complex lhs = eta * (p_g + shift * std::pow(y, a) * g);
        worst = std::max(worst, std::abs(lhs - p_f));
    }
    return worst;
}

double gauge_residual_fd(const PolyExpSum& test, const BatemanParams& p, const Grid1D& grid) {
    p.validate();
    const double a = p.alpha();
    const double kappa = gauge_kappa(p);
    const double shift = 0.5 * p.mass_a() * p.damping;
    const complex i(0.0, 1.0);
    auto eta = [&](double y) { return std::exp(i * kappa * std::pow(y, 2.0 * a)); };

    const SampledField f = SampledField::sample(grid, [&](double y) { return evaluate(test, y); });
    const SampledField g =
        SampledField::sample(grid, [&](double y) { return evaluate(test, y) / eta(y); });
    const SampledField dg = conformable_derivative(g, p.order);
    const SampledField df = conformable_derivative(f, p.order);
    double worst = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double y = grid[k];
        const complex lhs = eta(y) * (-i * p.hbar_a() * dg[k] + shift * std::pow(y, a) * g[k]);
        worst = std::max(worst, std::abs(lhs - (-i * p.hbar_a() * df[k])));
    }
    return worst;
}

SampledField classical_el_residual(const SampledField& trajectory, const BatemanParams& p,
                                   EomSign sign) {
    p.validate();
    const double omega_sq = p.omega_2a() - 0.25 * p.damping * p.damping;
    const double c = sign == EomSign::derived ? omega_sq : -omega_sq;
    const SampledField dd = conformable_second_derivative(trajectory, p.order);
    return dd + complex(c) * trajectory;
}

SampledField canonical_momentum(const SampledField& trajectory, const BatemanParams& p) {
    p.validate();
    const double ma = p.mass_a();
    return complex(ma) * conformable_derivative(trajectory, p.order) -
           complex(0.5 * ma * p.damping) * trajectory;
}

} // namespace fracbateman
