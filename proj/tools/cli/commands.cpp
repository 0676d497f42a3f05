#include <cmath>
#include <fstream>
#include <map>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "cli.hpp"

namespace fracbateman::cli {

namespace {

/// Rows of preformatted cells under a fixed header.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }

    std::string csv() const {
        std::string out = join(header, ",") + "\n";
        for (const auto& row : rows) {
            out += join(row, ",") + "\n";
        }
        return out;
    }

    std::string text() const {
        std::vector<std::size_t> width(header.size());
        for (std::size_t c = 0; c < header.size(); ++c) {
            width[c] = header[c].size();
            for (const auto& row : rows) {
                width[c] = std::max(width[c], row[c].size());
            }
        }
        auto line = [&](const std::vector<std::string>& cells) {
            std::string out;
            for (std::size_t c = 0; c < cells.size(); ++c) {
                out += fmt::format("{:>{}}", cells[c], width[c]);
                out += c + 1 == cells.size() ? "\n" : "  ";
            }
            return out;
        };
        std::string out = line(header);
        for (const auto& row : rows) {
            out += line(row);
        }
        return out;
    }

    static std::string join(const std::vector<std::string>& cells, const char* sep) {
        std::string out;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out += i ? sep : "";
            out += cells[i];
        }
        return out;
    }
};

std::string num(double v) { return format_number(v); }

std::string render(const Table& table, OutputFormat format) {
    return format == OutputFormat::csv ? table.csv() : table.text();
}

const char* frame_name(Frame f) { return f == Frame::gauged ? "gauged" : "original"; }

Table spectrum_table(const RunConfig& cfg) {
    derived_params(cfg.params);
    Table t{{"n", "energy"}, {}};
    for (int n = 0; n <= cfg.n_max; ++n) {
        t.add({std::to_string(n), num(energy(cfg.params, n))});
    }
    return t;
}

Table wavefunction_table(const RunConfig& cfg) {
    const BatemanParams& p = cfg.params;
    const Grid1D grid = cfg.y.grid();
    const double e = energy(p, cfg.n);
    Table t{{"y", "psi", "rho", "residual"}, {}};
    if (cfg.source == WaveSource::paper) {
        const Eigenstate state = make_eigenstate(p, cfg.n);
        const PolyExpSum psi = complex(state.norm) * state.wavefunction;
        const SampledField res = schrodinger_residual(psi, p, e, cfg.mode, grid);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double v = evaluate(psi, grid[i]).real();
            t.add({num(grid[i]), num(v), num(v * v), num(res[i].real())});
        }
    } else {
        const HermiteEigenfunction h = eigenfunction_hermite(p, cfg.n);
        const double b = normalization_constant(p, cfg.n, {}, EigenSource::hermite_oracle);
        const SampledField res = schrodinger_residual(h, p, e, cfg.mode, grid);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double v = b * h(grid[i]);
            t.add({num(grid[i]), num(v), num(v * v), num(b * res[i].real())});
        }
    }
    return t;
}

Table density_table(const RunConfig& cfg) {
    const Eigenstate state = make_eigenstate(cfg.params, cfg.n);
    const DensityField rho = probability_density(state, cfg.params, cfg.y.grid(), cfg.t.grid());
    const Field2D& f = rho.field;
    Table t{{"n", "y", "t", "rho"}, {}};
    for (std::size_t it = 0; it < f.t.size(); ++it) {
        for (std::size_t iy = 0; iy < f.y.size(); ++iy) {
            t.add({std::to_string(cfg.n), num(f.y[iy]), num(f.t[it]), num(f.at(iy, it))});
        }
    }
    return t;
}

Table current_table(const RunConfig& cfg) {
    const Eigenstate state = make_eigenstate(cfg.params, cfg.n);
    const CurrentField j =
        probability_current(state, cfg.params, cfg.frame, cfg.y.grid(), cfg.t.grid());
    const Field2D& f = j.field;
    Table t{{"n", "frame", "y", "t", "j"}, {}};
    for (std::size_t it = 0; it < f.t.size(); ++it) {
        for (std::size_t iy = 0; iy < f.y.size(); ++iy) {
            t.add({std::to_string(cfg.n), frame_name(cfg.frame), num(f.y[iy]), num(f.t[it]),
                   num(f.at(iy, it))});
        }
    }
    return t;
}

Table figure_table(const RunConfig& cfg, Figure figure) {
    FigureOverrides o;
    o.mass = cfg.params.mass;
    o.hbar = cfg.params.hbar;
    o.omega = cfg.params.omega;
    o.y_grid = cfg.y.grid();
    o.t_grid = cfg.t.grid();
    const FigureTable data = figure_data(figure, o);
    Table t{{"figure", "n", "alpha", "y", "t", "rho"}, {}};
    for (const FigureRow& row : data.rows) {
        t.add({figure_name(figure), std::to_string(row.n), num(row.alpha), num(row.y), num(row.t),
               num(row.rho)});
    }
    return t;
}

Table classical_table(const RunConfig& cfg) {
    const BatemanParams& p = cfg.params;
    const double a = p.alpha();
    const double omega = derived_params(p).omega;
    const Grid1D grid = cfg.t.grid();
    const SampledField y = SampledField::sample_real(
        grid, [&](double s) { return std::cos(omega * std::pow(s, a) / a); });
    const SampledField g = SampledField::sample_real(
        grid, [&](double s) { return std::exp(omega * std::pow(s, a) / a); });
    const SampledField momentum = canonical_momentum(y, p);
    const SampledField y_paper = classical_el_residual(y, p, EomSign::paper);
    const SampledField y_derived = classical_el_residual(y, p, EomSign::derived);
    const SampledField g_paper = classical_el_residual(g, p, EomSign::paper);
    const SampledField g_derived = classical_el_residual(g, p, EomSign::derived);
    Table t{{"t", "y", "momentum", "residual_paper", "residual_derived", "y_growing",
             "growing_residual_paper", "growing_residual_derived"},
            {}};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        t.add({num(grid[i]), num(y[i].real()), num(momentum[i].real()), num(y_paper[i].real()),
               num(y_derived[i].real()), num(g[i].real()), num(g_paper[i].real()),
               num(g_derived[i].real())});
    }
    return t;
}

std::string gnuplot_script(Figure figure, const std::string& data_path) {
    const std::string source = data_path.empty() ? std::string("figure.csv") : data_path;
    std::string s = fmt::format("# gnuplot script for {}\n", figure_name(figure));
    s += "set datafile separator ','\nset xlabel 'y'\nset ylabel 'rho'\nset key outside\n";
    if (figure == Figure::fig3) {
        s += "set multiplot layout 2,2\n";
        for (int n = 0; n <= 3; ++n) {
            s += fmt::format("set title 'n = {}'\nplot ", n);
            const double alphas[] = {0.80, 0.85, 0.90, 0.95, 1.00};
            for (int k = 0; k < 5; ++k) {
                s += fmt::format("'{}' every ::1 using ($2=={} && abs($3-{:.2f})<1e-9 ? $4 : 1/0):6 "
                                 "with lines title 'alpha={:.2f}'{}",
                                 source, n, alphas[k], alphas[k], k == 4 ? "\n" : ", \\\n     ");
            }
        }
        s += "unset multiplot\n";
    } else {
        s += "set ylabel 't'\nset zlabel 'rho'\nset multiplot layout 1,2\n";
        for (int n = 0; n <= 1; ++n) {
            s += fmt::format("set title 'n = {}'\nsplot '{}' every ::1 using "
                             "($2=={} ? $4 : 1/0):5:6 with dots notitle\n",
                             n, source, n);
        }
        s += "unset multiplot\n";
    }
    return s;
}

bool write_output(const std::string& path, const std::string& content, std::ostream& out,
                  std::ostream& err) {
    if (path.empty()) {
        out << content;
        return static_cast<bool>(out);
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << "error: cannot open output file '" << path << "'\n";
        return false;
    }
    file << content;
    if (!file.flush()) {
        err << "error: failed writing output file '" << path << "'\n";
        return false;
    }
    return true;
}

constexpr const char* kColumnsHelp = R"(CSV columns (header row, 12 significant digits, LF endings):
  spectrum      n,energy
  wavefunction  y,psi,rho,residual
  density       n,y,t,rho
  current       n,frame,y,t,j
  figure        figure,n,alpha,y,t,rho
  classical     t,y,momentum,residual_paper,residual_derived,y_growing,
                growing_residual_paper,growing_residual_derived
  verify        section,check,measured,tolerance,status
Exit codes: 0 success, 1 failed verify check, 2 usage or configuration error.)";

} // namespace

Invocation parse_invocation(std::span<const std::string> args) {
    CLI::App app{"Conformable Bateman oscillator: spectra, eigenstates, densities and checks",
                 "fracbateman"};
    app.footer(kColumnsHelp);
    app.require_subcommand(1);

    std::map<std::string, std::string> flag_values;
    std::map<std::string, CLI::Option*> flag_options;
    const std::map<std::string, std::string> descriptions = {
        {"alpha", "fractional order, 0 < alpha <= 1"},
        {"omega", "natural frequency omega > 0"},
        {"lambda", "damping rate lambda >= 0"},
        {"mass", "mass m > 0"},
        {"hbar", "reduced Planck constant > 0"},
        {"n", "quantum number"},
        {"n-max", "highest quantum number"},
        {"mode", "kinetic drift coefficient: paper|derived"},
        {"frame", "current frame: gauged|original"},
        {"source", "wavefunction form: paper|hermite"},
        {"y", "y grid as min,max,count"},
        {"t", "t grid as min,max,count"},
        {"out", "output path (default: standard output)"},
        {"format", "csv|text"},
    };
    for (const std::string& key : config_keys()) {
        flag_options[key] = app.add_option("--" + key, flag_values[key], descriptions.at(key));
    }
    std::string config_path;
    app.add_option("--config", config_path, "key = value settings file; flags take precedence");

    Invocation inv;
    const std::pair<const char*, const char*> commands[] = {
        {"spectrum", "energies for n = 0..n-max"},
        {"wavefunction", "normalized eigenfunction n on the y grid"},
        {"density", "probability density of state n on y x t"},
        {"current", "probability current of state n on y x t"},
        {"verify", "run the verification suite"},
        {"figure", "data behind the density figures"},
        {"classical", "classical equation-of-motion residuals"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        if (std::string_view(name) == "figure") {
            sub->add_option("name", inv.figure, "fig1|fig2|fig3")
                ->required()
                ->check(CLI::IsMember({"fig1", "fig2", "fig3"}));
            sub->add_option("--script", inv.script, "also write a gnuplot script to this path");
        }
    }

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        inv.help = app.help();
        return inv;
    } catch (const CLI::CallForAllHelp&) {
        inv.help = app.help("", CLI::AppFormatMode::All);
        return inv;
    } catch (const CLI::ParseError& e) {
        throw ConfigError(std::string(e.what()) + " (run with --help for usage)");
    }
    inv.command = app.get_subcommands().front()->get_name();

    if (!config_path.empty()) {
        inv.config = load_config(config_path);
    }
    for (const std::string& key : config_keys()) {
        if (flag_options[key]->count() > 0) {
            apply_setting(inv.config, key, flag_values[key]);
        }
    }
    try {
        derived_params(inv.config.params);
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    return inv;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    Invocation inv;
    try {
        inv = parse_invocation(args);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (!inv.help.empty()) {
        out << inv.help;
        return 0;
    }
    const RunConfig& cfg = inv.config;

    try {
        if (inv.command == "verify") {
            const VerifyReport report = build_verify_report(cfg);
            const std::string body =
                cfg.format == OutputFormat::csv ? report.to_csv() : report.to_text();
            if (!write_output(cfg.out, body, out, err)) {
                return 2;
            }
            return report.all_passed() ? 0 : 1;
        }

        std::string body;
        if (inv.command == "spectrum") {
            body = render(spectrum_table(cfg), cfg.format);
        } else if (inv.command == "wavefunction") {
            body = render(wavefunction_table(cfg), cfg.format);
        } else if (inv.command == "density") {
            body = render(density_table(cfg), cfg.format);
        } else if (inv.command == "current") {
            body = render(current_table(cfg), cfg.format);
        } else if (inv.command == "classical") {
            body = render(classical_table(cfg), cfg.format);
        } else {
            const Figure which = inv.figure == "fig1"   ? Figure::fig1
                                 : inv.figure == "fig2" ? Figure::fig2
                                                        : Figure::fig3;
            body = render(figure_table(cfg, which), cfg.format);
            if (!inv.script.empty() &&
                !write_output(inv.script, gnuplot_script(which, cfg.out), out, err)) {
                return 2;
            }
        }
        return write_output(cfg.out, body, out, err) ? 0 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace fracbateman::cli
