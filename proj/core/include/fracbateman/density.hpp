#pragma once

// Probability density, probability current and the continuity balance for
// stationary states, plus the tables behind the density figures.

#include <optional>
#include <vector>

#include "fracbateman/bateman.hpp"
#include "fracbateman/numerics.hpp"

namespace fracbateman {

/// literal: e^{-lambda t^a / 2}. conformable: e^{-lambda t^a / (2a)}, the
/// factor whose D^a_t is exactly -lambda/2 times itself.
enum class DampingConvention { literal, conformable };

/// Gauged frame uses the stored (real) state; original frame applies eta^{-1}
/// to it first.
enum class Frame { gauged, original };

double damping_factor(const BatemanParams& p, double t,
                      DampingConvention convention = DampingConvention::literal);

/// Real values on a (y, t) tensor grid, stored t-major: values[it * ny + iy].
struct Field2D {
    Grid1D y;
    Grid1D t;
    std::vector<double> values;

    double at(std::size_t iy, std::size_t it) const { return values[it * y.size() + iy]; }
};

struct DensityField {
    Field2D field;
    int n;
    BatemanParams params;
};

struct CurrentField {
    Field2D field;
    int n;
    BatemanParams params;
    Frame frame;
};

/// B_n^2 |psi_n(y)|^2 as a PolyExpSum (the t -> 0+ density).
PolyExpSum density_profile(const Eigenstate& state);

/// rho(y, t) = B_n^2 |psi_n(y)|^2 * damping(t). Throws std::invalid_argument
/// for an unnormalized state.
DensityField probability_density(const Eigenstate& state, const BatemanParams& p,
                                 const Grid1D& y_grid, const Grid1D& t_grid,
                                 DampingConvention convention = DampingConvention::literal);

/// j(y, t) evaluated pointwise: the phase eta^{-1} is applied numerically in
/// the original frame and D^a_y psi comes from the exact PolyExpSum derivative.
CurrentField probability_current(const Eigenstate& state, const BatemanParams& p, Frame frame,
                                 const Grid1D& y_grid, const Grid1D& t_grid,
                                 DampingConvention convention = DampingConvention::literal);

/// y-dependent part of j as a closed-form expression, j(y, t) = profile(y) * damping(t).
/// Built independently of probability_current: the eta phase enters through
/// its exact conformable derivative, -2 a kappa y^a.
PolyExpSum current_profile(const Eigenstate& state, const BatemanParams& p, Frame frame);

/// D^a_t rho + D^a_y j on the grid, both terms in closed form.
Field2D continuity_residual(const Eigenstate& state, const BatemanParams& p, Frame frame,
                            const Grid1D& y_grid, const Grid1D& t_grid,
                            DampingConvention convention = DampingConvention::literal);

enum class Figure { fig1, fig2, fig3 };

/// Optional overrides for figure_data. lambda and alpha are fixed by each
/// figure; for fig3 omega is solved per alpha so that F = 1.
struct FigureOverrides {
    std::optional<double> mass;
    std::optional<double> omega;
    std::optional<double> hbar;
    std::optional<Grid1D> y_grid;
    std::optional<Grid1D> t_grid;
    QuadratureSpec quadrature{};
};

struct FigureRow {
    int n;
    double alpha;
    double y;
    /// 0 stands for the t -> 0+ limit (fig3).
    double t;
    double rho;
};

/// One (n, alpha) curve family and the state that produced it.
struct FigurePanel {
    int n;
    BatemanParams params;
    Eigenstate state;
};

struct FigureTable {
    Figure figure;
    std::vector<FigurePanel> panels;
    std::vector<FigureRow> rows;
};

/// fig1: n in {0,1}, lambda = 0, alpha = 1 over the (y, t) grid.
/// fig2: as fig1 with lambda = 0.5.
/// fig3: t -> 0+ density for n = 0..3, alpha in {0.80, 0.85, 0.90, 0.95, 1.00}, F = 1.
FigureTable figure_data(Figure figure, const FigureOverrides& overrides = {});

const char* figure_name(Figure figure);

/// Default grids: y in [1e-3, 8] with 800 nodes, t in [1e-3, 5] with 50 nodes.
Grid1D default_y_grid();
Grid1D default_t_grid();

} // namespace fracbateman
