#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "cli.hpp"

namespace fracbateman::cli {

namespace {

constexpr double kNoTolerance = std::numeric_limits<double>::quiet_NaN();

void gate(VerifyReport& r, const std::string& section, const std::string& name, double measured,
          double tolerance) {
    const bool ok = std::isfinite(measured) && measured < tolerance;
    r.rows.push_back({section, name, measured, tolerance, ok ? CheckStatus::pass : CheckStatus::fail});
}

void info(VerifyReport& r, const std::string& section, const std::string& name, double measured) {
    r.rows.push_back({section, name, measured, kNoTolerance, CheckStatus::info});
}

const char* mode_name(KineticMode mode) {
    return mode == KineticMode::paper ? "paper" : "derived";
}

const char* status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "fail";
    case CheckStatus::info:
        return "info";
    }
    return "?";
}

double rel_diff(double value, double reference) {
    return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

void spectrum_checks(VerifyReport& r, const BatemanParams& p, int n_max) {
    const Spectrum oracle = oracle_spectrum(p, n_max);
    double worst = 0.0;
    for (const SpectrumEntry& e : oracle.entries()) {
        worst = std::max(worst, rel_diff(e.energy, energy(p, e.n)));
    }
    gate(r, "spectrum", fmt::format("oracle_rel_error_n0..{}", n_max), worst, 1e-3);

    const double quantum = p.alpha() * p.hbar_a() * derived_params(p).omega;
    double spacing = 0.0;
    for (int n = 0; n < 20; ++n) {
        spacing = std::max(spacing, rel_diff(energy(p, n + 1) - energy(p, n), quantum));
    }
    gate(r, "spectrum", "equal_spacing_n0..20", spacing, 1e-12);

    double enu = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        enu = std::max(enu, rel_diff(enu_pipeline(p, n).energy, energy(p, n)));
    }
    gate(r, "spectrum", "enu_energy_match", enu, 1e-12);
}

void eigenfunction_checks(VerifyReport& r, const BatemanParams& p, const Grid1D& coarse) {
    const PolyExpSum ground = eigenfunction_paper(p, 0);
    const double b0 = normalization_constant(p, 0);
    gate(r, "eigenfunction", "ground_state_residual",
         (complex(b0) * schrodinger_residual(ground, p, energy(p, 0), KineticMode::derived, coarse))
             .sup_norm(),
         1e-8);

    const Grid1D fine = Grid1D::uniform(0.1, 6.0, 5901);
    for (int n = 0; n <= 5; ++n) {
        const HermiteEigenfunction h = eigenfunction_hermite(p, n);
        const double bn = normalization_constant(p, n, {}, EigenSource::hermite_oracle);
        const double analytic =
            bn * schrodinger_residual(h, p, energy(p, n), KineticMode::derived, coarse).sup_norm();
        gate(r, "eigenfunction", fmt::format("hermite_residual_analytic_n{}", n), analytic, 1e-8);

        const SampledField sampled =
            SampledField::sample_real(fine, [&](double y) { return bn * h(y); });
        gate(r, "eigenfunction", fmt::format("hermite_residual_fd_n{}", n),
             fd_residual_norm(sampled, p, energy(p, n), KineticMode::derived), 1e-4);
    }
}

void normalization_checks(VerifyReport& r, const BatemanParams& p, int n_max) {
    for (int n = 0; n <= n_max; ++n) {
        const Eigenstate state = make_eigenstate(p, n);
        const PolyExpSum rho = density_profile(state);
        const double total = integrate_halfline([&](double y) { return evaluate(rho, y).real(); });
        gate(r, "normalization", fmt::format("unit_norm_n{}", n), std::abs(total - 1.0), 1e-6);
    }
}

void density_checks(VerifyReport& r, const RunConfig& cfg) {
    const BatemanParams& p = cfg.params;
    const Grid1D y_grid = cfg.y.grid();
    const Grid1D t_grid = cfg.t.grid();
    const Eigenstate state = make_eigenstate(p, 0);
    const DensityField rho = probability_density(state, p, y_grid, t_grid);

    double separable = 0.0;
    double previous_peak = std::numeric_limits<double>::infinity();
    bool decreasing = true;
    const double a = p.alpha();
    for (std::size_t it = 0; it < t_grid.size(); ++it) {
        const double expected =
            std::exp(-0.5 * p.damping * (std::pow(t_grid[it], a) - std::pow(t_grid[0], a)));
        double peak = 0.0;
        for (std::size_t iy = 0; iy < y_grid.size(); ++iy) {
            const double base = rho.field.at(iy, 0);
            peak = std::max(peak, rho.field.at(iy, it));
            if (base > 0.0) {
                separable = std::max(separable, rel_diff(rho.field.at(iy, it) / base, expected));
            }
        }
        if (it > 0 && !(peak < previous_peak)) {
            decreasing = false;
        }
        previous_peak = peak;
    }
    gate(r, "density", "separable_time_factor", separable, 1e-12);
    if (p.damping > 0.0) {
        gate(r, "density", "peak_strictly_decreasing", decreasing ? 0.0 : 1.0, 0.5);
    }

    const Grid1D probe = Grid1D::uniform(0.1, 6.0, 600);
    const Grid1D t_probe = Grid1D::uniform(0.1, 2.0, 3);
    for (Frame frame : {Frame::gauged, Frame::original}) {
        const char* name = frame == Frame::gauged ? "gauged" : "original";
        const Field2D res = continuity_residual(state, p, frame, probe, t_probe);
        double worst = 0.0;
        for (double v : res.values) {
            worst = std::max(worst, std::abs(v));
        }
        if (p.damping == 0.0) {
            gate(r, "continuity", fmt::format("residual_{}_n0", name), worst, 1e-8);
        } else {
            info(r, "continuity", fmt::format("residual_{}_n0", name), worst);
        }
    }
    const CurrentField j = probability_current(state, p, Frame::original, probe, t_probe);
    double j_max = 0.0;
    for (double v : j.field.values) {
        j_max = std::max(j_max, std::abs(v));
    }
    gate(r, "continuity", "original_frame_current_vanishes", j_max, 1e-8);
}

void gauge_checks(VerifyReport& r, const BatemanParams& p) {
    const Grid1D grid = Grid1D::uniform(0.1, 6.0, 600);
    // e^{-y^2} and y e^{-y^2}
    const PolyExpSum gauss = PolyExpSum::term(1.0, 0.0, -1.0, 2.0);
    const PolyExpSum y_gauss = PolyExpSum::term(1.0, 1.0, -1.0, 2.0);
    gate(r, "gauge", "identity_exp(-y^2)", gauge_residual(gauss, p, grid), 1e-6);
    gate(r, "gauge", "identity_y*exp(-y^2)", gauge_residual(y_gauss, p, grid), 1e-6);
}

void classical_checks(VerifyReport& r, const BatemanParams& p) {
    const Grid1D t_grid = Grid1D::uniform(0.1, 10.0, 2000);
    const double a = p.alpha();
    const double omega = derived_params(p).omega;
    const SampledField y = SampledField::sample_real(
        t_grid, [&](double t) { return std::cos(omega * std::pow(t, a) / a); });
    const double derived = classical_el_residual(y, p, EomSign::derived).sup_norm();
    // The 3-point stencil does not resolve the t^a kink near t = 0.1 to 1e-5
    // once a < 1, so only the a = 1 case is gated.
    if (a == 1.0) {
        gate(r, "classical", "cos_trajectory_derived_sign", derived, 1e-5);
    } else {
        info(r, "classical", "cos_trajectory_derived_sign", derived);
    }
    info(r, "classical", "cos_trajectory_paper_sign",
         classical_el_residual(y, p, EomSign::paper).sup_norm());
}

void discrepancy_rows(VerifyReport& r, const BatemanParams& p) {
    const Grid1D coarse = Grid1D::uniform(0.1, 6.0, 600);
    const Grid1D fine = Grid1D::uniform(0.1, 6.0, 1200);
    for (int n = 1; n <= 3; ++n) {
        const PolyExpSum psi = complex(normalization_constant(p, n)) * eigenfunction_paper(p, n);
        for (KineticMode mode : {KineticMode::paper, KineticMode::derived}) {
            const double e = energy(p, n);
            const double c = schrodinger_residual(psi, p, e, mode, coarse).sup_norm();
            const double f = schrodinger_residual(psi, p, e, mode, fine).sup_norm();
            const std::string stem = fmt::format("paper_state_n{}_{}_mode", n, mode_name(mode));
            info(r, "discrepancy", stem + "_residual_600", c);
            info(r, "discrepancy", stem + "_residual_1200", f);
            info(r, "discrepancy", stem + "_refinement_change", rel_diff(f, c));
        }
    }
}

} // namespace

bool VerifyReport::all_passed() const {
    return std::none_of(rows.begin(), rows.end(),
                        [](const CheckRow& row) { return row.status == CheckStatus::fail; });
}

std::string VerifyReport::to_csv() const {
    std::string out = "section,check,measured,tolerance,status\n";
    for (const CheckRow& row : rows) {
        out += fmt::format("{},{},{},{},{}\n", row.section, row.name, format_number(row.measured),
                           std::isnan(row.tolerance) ? "" : format_number(row.tolerance),
                           status_name(row.status));
    }
    return out;
}

std::string VerifyReport::to_text() const {
    std::string out;
    std::string section;
    std::size_t failed = 0;
    for (const CheckRow& row : rows) {
        if (row.section != section) {
            section = row.section;
            out += fmt::format("[{}]\n", section);
        }
        const std::string tol =
            std::isnan(row.tolerance) ? std::string("-") : fmt::format("< {:.3g}", row.tolerance);
        out += fmt::format("  {:<5} {:<48} {:>14.6e}  {}\n", status_name(row.status), row.name,
                           row.measured, tol);
        failed += row.status == CheckStatus::fail ? 1 : 0;
    }
    out += failed == 0 ? std::string("all checks passed\n")
                       : fmt::format("{} check(s) failed\n", failed);
    return out;
}

VerifyReport build_verify_report(const RunConfig& cfg) {
    const BatemanParams& p = cfg.params;
    p.validate();
    derived_params(p);

    VerifyReport report;
    const Grid1D coarse = Grid1D::uniform(0.1, 6.0, 600);
    spectrum_checks(report, p, cfg.n_max);
    eigenfunction_checks(report, p, coarse);
    normalization_checks(report, p, cfg.n_max);
    density_checks(report, cfg);
    gauge_checks(report, p);
    classical_checks(report, p);
    discrepancy_rows(report, p);
    return report;
}

} // namespace fracbateman::cli
