#pragma once

// Normalization, the discretized-operator spectrum oracle and residual norms.

#include <vector>

#include "fracbateman/bateman.hpp"
#include "fracbateman/quadrature.hpp"

namespace fracbateman {

enum class Boundary { neumann, dirichlet, both };

/// Uniform grid z_i = i h, h = z_max / nodes, for the z = y^a oscillator.
struct EigensolverSpec {
    int nodes = 4000;
    /// 0 selects default_z_max().
    double z_max = 0.0;
    Boundary boundary = Boundary::both;

    void validate() const;
};

struct SpectrumEntry {
    int n;
    double energy;

    friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Energies with strictly increasing quantum numbers and energies. Entries
/// are labelled with the physical n: a Neumann-only spectrum holds 0, 2, 4, ...
/// and a Dirichlet-only one 1, 3, 5, ...
class Spectrum {
public:
    explicit Spectrum(std::vector<SpectrumEntry> entries);

    const std::vector<SpectrumEntry>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const SpectrumEntry& operator[](std::size_t i) const noexcept { return entries_[i]; }

private:
    std::vector<SpectrumEntry> entries_;
};

/// energy(p, n) for n = 0..n_max.
Spectrum formula_spectrum(const BatemanParams& p, int n_max);

/// sqrt(a/F) * max(10, sqrt(2 n_max + 1) + 8): the oscillator length in z
/// times a margin that keeps the n_max-th turning point well inside the box.
double default_z_max(const BatemanParams& p, int n_max);

/// Lowest n_max + 1 eigenvalues of -(hbar^(2a) a^2 / 2m^a) d^2/dz^2 + (m^a Omega^2 / 2) z^2
/// on (0, z_max) with a three-point stencil. Neumann (mirror ghost node) at
/// z = 0 yields the even states, Dirichlet (zero ghost node) the odd ones;
/// `both` merges them. The far end is Dirichlet.
Spectrum oracle_spectrum(const BatemanParams& p, int n_max, const EigensolverSpec& spec = {});

/// B_n = (integral over (0, inf) of |psi_n|^2)^(-1/2) for the unnormalized
/// state of the given source.
double normalization_constant(const BatemanParams& p, int n, const QuadratureSpec& spec = {},
                              EigenSource source = EigenSource::paper_rodriguez);

/// Fully populated, normalized eigenstate.
Eigenstate make_eigenstate(const BatemanParams& p, int n,
                           EigenSource source = EigenSource::paper_rodriguez,
                           const QuadratureSpec& spec = {});

/// sup norm of the finite-difference radial-equation residual of sampled psi,
/// skipping two nodes at each end. Needs at least 7 nodes.
double fd_residual_norm(const SampledField& psi, const BatemanParams& p, double energy,
                        KineticMode mode);

} // namespace fracbateman
