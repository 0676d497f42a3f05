#pragma once

// Conformable Bateman oscillator: parameters, spectrum, eigenfunctions and
// the operator identities behind the quantization.
//
// Conventions: m^a, w^(2a) and hbar^a are the base parameters raised to the
// order a. The gauged Hamiltonian is
//   H = P^2 / (2 m^a) + (1/2) m^a Omega^2 y^(2a),  Omega^2 = w^(2a) - lambda^2/4,
// with P = -i hbar^a D^a_y, and F = (m^a / hbar^a) Omega.

#include <functional>

#include "fracbateman/conformable.hpp"
#include "fracbateman/polyexp.hpp"

namespace fracbateman {

struct BatemanParams {
    double mass = 1.0;
    double omega = 1.0;
    /// lambda, the damping rate.
    double damping = 0.0;
    double hbar = 1.0;
    FractionalOrder order{1.0};

    /// Throws std::invalid_argument unless mass, omega, hbar > 0 and damping >= 0.
    void validate() const;

    double alpha() const noexcept { return order.value(); }
    double mass_a() const;
    double omega_2a() const;
    double hbar_a() const;
};

struct DerivedParams {
    double omega_sq;
    double omega;
    double F;
};

/// Omega^2, Omega and F. Overdamped input (lambda > 2 w^a) throws std::domain_error.
DerivedParams derived_params(const BatemanParams& p);

/// a hbar^a Omega (n + 1/2).
double energy(const BatemanParams& p, int n);

/// Which 1/y drift coefficient the radial equation uses: (1+a) as printed in
/// the quantized equation, or (1-a) as implied by expanding D^a D^a.
enum class KineticMode { paper, derived };

double drift_coefficient(KineticMode mode, FractionalOrder order);

enum class EigenSource { paper_rodriguez, hermite_oracle };

struct Eigenstate {
    int n = 0;
    double energy = 0.0;
    /// Unnormalized; the physical state is norm * wavefunction.
    PolyExpSum wavefunction;
    /// B_n > 0 once normalized, 0 before.
    double norm = 0.0;
    EigenSource source = EigenSource::paper_rodriguez;
};

/// Rodriguez-form state
///   y^a e^{(F/2a) y^(2a)} d^n/dy^n [ y^(n-a) e^{-(F/a) y^(2a)} ]
/// without B_n. Every term decays as e^{-(F/2a) y^(2a)}.
PolyExpSum eigenfunction_paper(const BatemanParams& p, int n);

/// y -> H_n(sqrt(F/a) y^a) e^{-(F/2a) y^(2a)}, the exact derived-mode
/// eigenfunction obtained from the substitution z = y^a. Derivatives are
/// computed in closed form through the Hermite-function identities, without
/// going through PolyExpSum.
class HermiteEigenfunction {
public:
    HermiteEigenfunction(int n, double F, FractionalOrder order);

    int n() const noexcept { return n_; }
    double operator()(double y) const;
    double first_derivative(double y) const;
    double second_derivative(double y) const;

    /// The same function expanded as a PolyExpSum.
    PolyExpSum expression() const;

private:
    struct Jet {
        double u, du, d2u;
    };
    Jet jet(double s) const;

    int n_;
    double scale_;
    double alpha_;
};

HermiteEigenfunction eigenfunction_hermite(const BatemanParams& p, int n);

/// Pointwise residual of
///   psi'' + (c/y) psi' + (2 m^a / (y^2 hbar^(2a))) (E y^(2a) - (m^a Omega^2 / 2) y^(4a)) psi
/// with c chosen by `mode`. The overloads differ in how derivatives are taken:
/// exactly for PolyExpSum and HermiteEigenfunction, by finite differences on
/// `grid` for a plain function.
SampledField schrodinger_residual(const PolyExpSum& psi, const BatemanParams& p, double energy,
                                  KineticMode mode, const Grid1D& grid);
SampledField schrodinger_residual(const HermiteEigenfunction& psi, const BatemanParams& p,
                                  double energy, KineticMode mode, const Grid1D& grid);
SampledField schrodinger_residual(const std::function<complex(double)>& psi,
                                  const BatemanParams& p, double energy, KineticMode mode,
                                  const Grid1D& grid);

/// Residual of the radial equation from already computed psi, psi', psi''.
complex schrodinger_residual_at(double y, complex psi, complex dpsi, complex d2psi,
                                const BatemanParams& p, double energy, KineticMode mode);

/// Output of the extended Nikiforov-Uvarov chain specialised to the Bateman
/// coefficients (sigma_f = y, A = a/2, S = B = P = 0, decaying branch).
struct EnuSolution {
    double A;
    /// Coefficient of y^(2a-1) in G(y), fixed by the perfect-square condition.
    double Q;
    PolyExpSum pi;
    PolyExpSum tau;
    /// h = pi' + G.
    PolyExpSum h;
    /// h_n = -(n/2) tau' - n(n-1)/6 sigma_f'' + C_n with C_n eliminated (= 0).
    PolyExpSum h_n;
    double energy;
};

/// Runs the coefficient matching for state n and solves it for the energy.
/// The result is independent of `mode`: the drift constant only enters
/// through its square, which is a^2/4 either way.
EnuSolution enu_pipeline(const BatemanParams& p, int n, KineticMode mode = KineticMode::derived);

enum class HamiltonianForm { original, gauged };

/// Classical value of the original (cross-term) or gauged Hamiltonian.
double hamiltonian_value(double y, double momentum, const BatemanParams& p, HamiltonianForm form);

/// Phase exponent of eta = exp(i kappa y^(2a)), kappa = m^a lambda / (4 a hbar^a).
double gauge_kappa(const BatemanParams& p);

/// sup over `grid` of | eta (P + m^a lambda y^a / 2) eta^{-1} f - P f |, with
/// f' taken exactly from the PolyExpSum and the eta phase differentiated in
/// closed form.
double gauge_residual(const PolyExpSum& test, const BatemanParams& p, const Grid1D& grid);

/// Finite-difference variant of gauge_residual: eta^{-1} f is sampled and D^a
/// applied numerically.
double gauge_residual_fd(const PolyExpSum& test, const BatemanParams& p, const Grid1D& grid);

/// Sign convention for the classical equation of motion
/// D^a D^a y + c y = 0: paper uses c = lambda^2/4 - w^(2a), derived uses
/// c = w^(2a) - lambda^2/4.
enum class EomSign { paper, derived };

SampledField classical_el_residual(const SampledField& trajectory, const BatemanParams& p,
                                   EomSign sign);

/// m^a D^a_t y - m^a lambda y / 2 along a sampled trajectory.
SampledField canonical_momentum(const SampledField& trajectory, const BatemanParams& p);

} // namespace fracbateman
