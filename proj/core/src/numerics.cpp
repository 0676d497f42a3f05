#include "fracbateman/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fracbateman/eigensolver.hpp"

namespace fracbateman {

void EigensolverSpec::validate() const {
    if (nodes < 500) {
        throw std::invalid_argument("eigensolver needs at least 500 nodes");
    }
    if (!(z_max >= 0.0) || !std::isfinite(z_max)) {
        throw std::invalid_argument("eigensolver box size must be nonnegative");
    }
}

Spectrum::Spectrum(std::vector<SpectrumEntry> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i].n <= entries_[i - 1].n) {
            throw std::invalid_argument("spectrum quantum numbers must increase");
        }
        if (!(entries_[i].energy > entries_[i - 1].energy)) {
            throw std::invalid_argument("spectrum energies must be strictly increasing");
        }
    }
}

Spectrum formula_spectrum(const BatemanParams& p, int n_max) {
    if (n_max < 0) {
        throw std::invalid_argument("n_max must be nonnegative");
    }
    std::vector<SpectrumEntry> out;
    for (int n = 0; n <= n_max; ++n) {
        out.push_back({n, energy(p, n)});
    }
    return Spectrum(std::move(out));
}

double default_z_max(const BatemanParams& p, int n_max) {
    const DerivedParams d = derived_params(p);
    if (!(d.F > 0.0)) {
        throw std::domain_error("oracle needs strict underdamping");
    }
    const double length = std::sqrt(p.alpha() / d.F);
    return length * std::max(10.0, std::sqrt(2.0 * n_max + 1.0) + 8.0);
}

namespace {

struct OscillatorCoefficients {
    double kinetic;   // hbar^(2a) a^2 / (2 m^a)
    double potential; // m^a Omega^2 / 2
};

OscillatorCoefficients oscillator(const BatemanParams& p) {
    const DerivedParams d = derived_params(p);
    if (!(d.omega_sq > 0.0)) {
        throw std::domain_error("oracle needs strict underdamping (lambda < 2 omega^alpha)");
    }
    const double a = p.alpha();
    return {p.hbar_a() * p.hbar_a() * a * a / (2.0 * p.mass_a()),
            0.5 * p.mass_a() * d.omega_sq};
}

std::vector<double> family_eigenvalues(const OscillatorCoefficients& c, int nodes, double z_max,
                                       bool neumann, std::size_t count) {
    const double h = z_max / nodes;
    const double off = -c.kinetic / (h * h);
    SymmetricTridiagonal m;
    const int first = neumann ? 0 : 1;
    for (int i = first; i < nodes; ++i) {
        const double z = i * h;
        m.diag.push_back(2.0 * c.kinetic / (h * h) + c.potential * z * z);
    }
    m.offdiag.assign(m.diag.size() - 1, off);
    if (neumann) {
        // mirror ghost psi_{-1} = psi_1 doubles the first coupling; the
        // similarity scaling diag(1/sqrt2, 1, ...) makes it symmetric
        m.offdiag[0] = std::sqrt(2.0) * off;
    }
    return lowest_eigenvalues(m, count);
}

void check_resolvable(const OscillatorCoefficients& c, int nodes, double z_max, double top_energy) {
    const double turning = std::sqrt(top_energy / c.potential);
    if (turning > 0.5 * z_max) {
        throw std::invalid_argument("requested states do not fit in the eigensolver box "
                                    "(turning point " +
                                    std::to_string(turning) + " vs z_max " +
                                    std::to_string(z_max) + ")");
    }
    // at least ten nodes per local wavelength at the bottom of the well
    const double wavenumber = std::sqrt(top_energy / c.kinetic);
    const double h = z_max / nodes;
    if (h * wavenumber > 2.0 * M_PI / 10.0) {
        throw std::invalid_argument("eigensolver grid too coarse for the requested states");
    }
}

} // namespace

Spectrum oracle_spectrum(const BatemanParams& p, int n_max, const EigensolverSpec& spec) {
    spec.validate();
    if (n_max < 0) {
        throw std::invalid_argument("n_max must be nonnegative");
    }
    const OscillatorCoefficients c = oscillator(p);
    const double z_max = spec.z_max > 0.0 ? spec.z_max : default_z_max(p, n_max);
    const std::size_t total = static_cast<std::size_t>(n_max) + 1;

    // highest physical quantum number requested
    int top_n = n_max;
    if (spec.boundary == Boundary::neumann) {
        top_n = 2 * n_max;
    } else if (spec.boundary == Boundary::dirichlet) {
        top_n = 2 * n_max + 1;
    }
    const double top_energy = energy(p, top_n);
    check_resolvable(c, spec.nodes, z_max, top_energy);

    std::vector<SpectrumEntry> out;
    switch (spec.boundary) {
    case Boundary::neumann: {
        const auto ev = family_eigenvalues(c, spec.nodes, z_max, true, total);
        for (std::size_t k = 0; k < ev.size(); ++k) {
            out.push_back({static_cast<int>(2 * k), ev[k]});
        }
        break;
    }
    case Boundary::dirichlet: {
        const auto ev = family_eigenvalues(c, spec.nodes, z_max, false, total);
        for (std::size_t k = 0; k < ev.size(); ++k) {
            out.push_back({static_cast<int>(2 * k + 1), ev[k]});
        }
        break;
    }
    case Boundary::both: {
        const auto even = family_eigenvalues(c, spec.nodes, z_max, true, (total + 1) / 2);
        const auto odd = family_eigenvalues(c, spec.nodes, z_max, false, total / 2);
        std::vector<double> merged(even);
        merged.insert(merged.end(), odd.begin(), odd.end());
        std::sort(merged.begin(), merged.end());
        for (std::size_t k = 0; k < merged.size(); ++k) {
            out.push_back({static_cast<int>(k), merged[k]});
        }
        break;
    }
    }
    return Spectrum(std::move(out));
}

double normalization_constant(const BatemanParams& p, int n, const QuadratureSpec& spec,
                              EigenSource source) {
    double integral = 0.0;
    if (source == EigenSource::hermite_oracle) {
        const HermiteEigenfunction psi = eigenfunction_hermite(p, n);
        integral = integrate_halfline(
            [&](double y) {
                const double v = psi(y);
                return v * v;
            },
            spec);
    } else {
        const PolyExpSum psi = eigenfunction_paper(p, n);
        integral = integrate_halfline([&](double y) { return std::norm(evaluate(psi, y)); }, spec);
    }
    if (!(integral > 0.0)) {
        throw std::runtime_error("wavefunction has zero norm");
    }
    return 1.0 / std::sqrt(integral);
}

Eigenstate make_eigenstate(const BatemanParams& p, int n, EigenSource source,
                           const QuadratureSpec& spec) {
    Eigenstate s;
    s.n = n;
    s.energy = energy(p, n);
    s.source = source;
    s.wavefunction = source == EigenSource::hermite_oracle ? eigenfunction_hermite(p, n).expression()
                                                           : eigenfunction_paper(p, n);
    s.norm = normalization_constant(p, n, spec, source);
    return s;
}

double fd_residual_norm(const SampledField& psi, const BatemanParams& p, double energy,
                        KineticMode mode) {
    const std::size_t n = psi.size();
    if (n < 7) {
        throw std::invalid_argument("residual norm needs at least 7 grid nodes");
    }
    const SampledField d1 = finite_difference(psi, 1);
    const SampledField d2 = finite_difference(psi, 2);
    double worst = 0.0;
    for (std::size_t i = 2; i + 2 < n; ++i) {
        const complex r =
            schrodinger_residual_at(psi.grid()[i], psi[i], d1[i], d2[i], p, energy, mode);
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

} // namespace fracbateman
