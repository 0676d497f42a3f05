#include "fracbateman/density.hpp"

#include <cmath>
#include <stdexcept>

namespace fracbateman {

namespace {

void require_normalized(const Eigenstate& state) {
    if (!(state.norm > 0.0) || !std::isfinite(state.norm)) {
        throw std::invalid_argument("eigenstate is not normalized (B_n unset)");
    }
}

double damping_rate(const BatemanParams& p, DampingConvention convention) {
    // D^a_t of the damping factor divided by the factor
    return convention == DampingConvention::literal ? -0.5 * p.damping * p.alpha()
                                                    : -0.5 * p.damping;
}

PolyExpSum normalized(const Eigenstate& state) {
    return complex(state.norm) * state.wavefunction;
}

Field2D tabulate(const Grid1D& y_grid, const Grid1D& t_grid, const std::vector<double>& profile,
                 const std::vector<double>& time_factor) {
    Field2D out{y_grid, t_grid, {}};
    out.values.reserve(y_grid.size() * t_grid.size());
    for (double tf : time_factor) {
        for (double v : profile) {
            out.values.push_back(v * tf);
        }
    }
    return out;
}

std::vector<double> damping_samples(const BatemanParams& p, const Grid1D& t_grid,
                                    DampingConvention convention) {
    std::vector<double> out;
    out.reserve(t_grid.size());
    for (double t : t_grid.points()) {
        out.push_back(damping_factor(p, t, convention));
    }
    return out;
}

} // namespace

double damping_factor(const BatemanParams& p, double t, DampingConvention convention) {
    if (!(t > 0.0)) {
        throw std::domain_error("damping factor is defined for t > 0");
    }
    const double a = p.alpha();
    const double exponent = -0.5 * p.damping * std::pow(t, a);
    return std::exp(convention == DampingConvention::literal ? exponent : exponent / a);
}

PolyExpSum density_profile(const Eigenstate& state) {
    require_normalized(state);
    const PolyExpSum psi = normalized(state);
    return multiply(conj(psi), psi);
}

DensityField probability_density(const Eigenstate& state, const BatemanParams& p,
                                 const Grid1D& y_grid, const Grid1D& t_grid,
                                 DampingConvention convention) {
    require_normalized(state);
    const PolyExpSum psi = normalized(state);
    std::vector<double> profile;
    profile.reserve(y_grid.size());
    for (double y : y_grid.points()) {
        profile.push_back(std::norm(evaluate(psi, y)));
    }
    return {tabulate(y_grid, t_grid, profile, damping_samples(p, t_grid, convention)), state.n, p};
}

CurrentField probability_current(const Eigenstate& state, const BatemanParams& p, Frame frame,
                                  const Grid1D& y_grid, const Grid1D& t_grid,
                                  DampingConvention convention) {
    require_normalized(state);
    const double a = p.alpha();
    const double kappa = frame == Frame::original ? gauge_kappa(p) : 0.0;
    const complex i(0.0, 1.0);
    const PolyExpSum psi = normalized(state);
    const PolyExpSum dpsi = conformable_diff(psi, p.order);

    std::vector<double> profile;
    profile.reserve(y_grid.size());
    for (double y : y_grid.points()) {
        const complex phase = std::exp(-i * kappa * std::pow(y, 2.0 * a));
        const complex v = phase * evaluate(psi, y);
        const complex dv =
            phase * (evaluate(dpsi, y) - i * 2.0 * a * kappa * std::pow(y, a) * evaluate(psi, y));
        // (hbar^a / 2i m^a)(v* Dv - v Dv*) = (hbar^a / m^a) Im(v* Dv)
        const double flux = p.hbar_a() / p.mass_a() * (std::conj(v) * dv).imag();
        const double drift = 0.5 * p.damping * std::pow(y, a) * std::norm(v);
        profile.push_back(flux + drift);
    }
    return {tabulate(y_grid, t_grid, profile, damping_samples(p, t_grid, convention)), state.n, p,
            frame};
}

PolyExpSum current_profile(const Eigenstate& state, const BatemanParams& p, Frame frame) {
    require_normalized(state);
    const double a = p.alpha();
    const PolyExpSum psi = normalized(state);
    const PolyExpSum dpsi = conformable_diff(psi, p.order);
    const PolyExpSum rho = multiply(conj(psi), psi);
    const PolyExpSum y_a = PolyExpSum::term(1.0, a);

    // Im(psi* D psi) = (psi* D psi - psi D psi*) / 2i
    const PolyExpSum im_part =
        complex(0.0, -0.5) * (multiply(conj(psi), dpsi) - multiply(psi, conj(dpsi)));
    double drift = 0.5 * p.damping;
    if (frame == Frame::original) {
        // eta^{-1} contributes -2 a kappa y^a to Im(psi* D psi)
        drift -= p.hbar_a() / p.mass_a() * 2.0 * a * gauge_kappa(p);
    }
    return complex(p.hbar_a() / p.mass_a()) * im_part + complex(drift) * multiply(y_a, rho);
}

Field2D continuity_residual(const Eigenstate& state, const BatemanParams& p, Frame frame,
                            const Grid1D& y_grid, const Grid1D& t_grid,
                            DampingConvention convention) {
    const PolyExpSum rho = density_profile(state);
    const PolyExpSum dj = conformable_diff(current_profile(state, p, frame), p.order);
    const double rate = damping_rate(p, convention);
    std::vector<double> profile;
    profile.reserve(y_grid.size());
    for (double y : y_grid.points()) {
        profile.push_back(rate * evaluate(rho, y).real() + evaluate(dj, y).real());
    }
    return tabulate(y_grid, t_grid, profile, damping_samples(p, t_grid, convention));
}

const char* figure_name(Figure figure) {
    switch (figure) {
    case Figure::fig1:
        return "fig1";
    case Figure::fig2:
        return "fig2";
    case Figure::fig3:
        return "fig3";
    }
    return "?";
}

Grid1D default_y_grid() { return Grid1D::uniform(1e-3, 8.0, 800); }
Grid1D default_t_grid() { return Grid1D::uniform(1e-3, 5.0, 50); }

FigureTable figure_data(Figure figure, const FigureOverrides& overrides) {
    const Grid1D y_grid = overrides.y_grid.value_or(default_y_grid());
    const Grid1D t_grid = overrides.t_grid.value_or(default_t_grid());
    const double mass = overrides.mass.value_or(1.0);
    const double hbar = overrides.hbar.value_or(1.0);
    FigureTable table{figure, {}, {}};

    if (figure == Figure::fig3) {
        for (double alpha : {0.80, 0.85, 0.90, 0.95, 1.00}) {
            BatemanParams p;
            p.mass = mass;
            p.hbar = hbar;
            p.order = FractionalOrder(alpha);
            // F = (m/hbar)^a sqrt(w^(2a) - lambda^2/4) = 1 with lambda = 0
            p.omega = hbar / mass;
            for (int n = 0; n <= 3; ++n) {
                const Eigenstate state =
                    make_eigenstate(p, n, EigenSource::paper_rodriguez, overrides.quadrature);
                const PolyExpSum rho = density_profile(state);
                for (double y : y_grid.points()) {
                    table.rows.push_back({n, alpha, y, 0.0, evaluate(rho, y).real()});
                }
                table.panels.push_back({n, p, state});
            }
        }
        return table;
    }

    BatemanParams p;
    p.mass = mass;
    p.hbar = hbar;
    p.omega = overrides.omega.value_or(1.0);
    p.damping = figure == Figure::fig2 ? 0.5 : 0.0;
    p.order = FractionalOrder(1.0);
    for (int n = 0; n <= 1; ++n) {
        const Eigenstate state =
            make_eigenstate(p, n, EigenSource::paper_rodriguez, overrides.quadrature);
        const DensityField rho = probability_density(state, p, y_grid, t_grid);
        for (std::size_t it = 0; it < t_grid.size(); ++it) {
            for (std::size_t iy = 0; iy < y_grid.size(); ++iy) {
                table.rows.push_back({n, 1.0, y_grid[iy], t_grid[it], rho.field.at(iy, it)});
            }
        }
        table.panels.push_back({n, p, state});
    }
    return table;
}

} // namespace fracbateman
