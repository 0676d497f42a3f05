#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "generators.hpp"

namespace fb = fracbateman;
using fb::testing::rel_error;
using fb::testing::Rng;

namespace {

fb::BatemanParams params(double alpha, double lambda = 0.0) {
    fb::BatemanParams p;
    p.order = fb::FractionalOrder(alpha);
    p.damping = lambda;
    return p;
}

} // namespace

TEST(Hermite, LowOrdersAndRecurrence) {
    for (double x : {-1.3, 0.0, 0.4, 2.5}) {
        EXPECT_EQ(fb::hermite(0, x), 1.0);
        EXPECT_DOUBLE_EQ(fb::hermite(1, x), 2 * x);
        EXPECT_DOUBLE_EQ(fb::hermite(2, x), 4 * x * x - 2);
        EXPECT_NEAR(fb::hermite(3, x), 8 * x * x * x - 12 * x, 1e-12);
        const auto pair = fb::hermite_pair(3, x);
        EXPECT_DOUBLE_EQ(pair.current, fb::hermite(3, x));
        EXPECT_DOUBLE_EQ(pair.previous, fb::hermite(2, x));
    }
    EXPECT_EQ(fb::hermite_pair(0, 0.7).previous, 0.0);
    EXPECT_THROW(fb::hermite(-1, 0.0), std::invalid_argument);
    EXPECT_THROW(fb::hermite(fb::kMaxHermiteDegree + 1, 0.0), std::invalid_argument);
}

TEST(Hermite, CoefficientsMatchRecurrence) {
    Rng rng(4);
    for (int n = 0; n <= 12; ++n) {
        const auto c = fb::hermite_coefficients(n);
        ASSERT_EQ(c.size(), static_cast<std::size_t>(n + 1));
        EXPECT_DOUBLE_EQ(c.back(), std::pow(2.0, n));
        const double x = rng.uniform(-2.0, 2.0);
        double acc = 0.0;
        for (int k = n; k >= 0; --k) {
            acc = acc * x + c[k];
        }
        EXPECT_LE(std::abs(acc - fb::hermite(n, x)), 1e-10 * std::max(1.0, std::abs(acc)));
    }
}

TEST(Quadrature, ReferenceIntegrals) {
    const fb::QuadratureSpec spec{};
    EXPECT_NEAR(fb::integrate_halfline([](double y) { return std::exp(-y); }, spec), 1.0, 1e-10);
    EXPECT_NEAR(fb::integrate_halfline([](double y) { return std::exp(-y * y); }, spec),
                std::sqrt(std::numbers::pi) / 2, 1e-10);
    EXPECT_NEAR(fb::integrate_halfline([](double y) { return y * y * std::exp(-y * y); }, spec),
                std::sqrt(std::numbers::pi) / 4, 1e-10);
}

TEST(Quadrature, FiniteIntervalAndErrors) {
    const auto r = fb::integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 1e-12, 100);
    EXPECT_NEAR(r.value, 2.0, 1e-12);
    EXPECT_GE(r.intervals, 1);
    EXPECT_THROW(fb::integrate([](double) { return NAN; }, 0.0, 1.0, 1e-8, 100), std::domain_error);
    EXPECT_THROW(fb::integrate([](double x) { return 1.0 / std::sqrt(x); }, 1e-300, 1.0, 1e-14, 3),
                 std::runtime_error);
    EXPECT_THROW(fb::integrate_halfline([](double) { return 1.0; }), std::runtime_error);

    fb::QuadratureSpec bad;
    bad.rel_tol = 0.5;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    fb::QuadratureSpec cut;
    cut.y_max = 1.0;
    EXPECT_THROW(fb::integrate_halfline([](double y) { return std::exp(-y); }, cut), std::domain_error);
}

TEST(Eigensolver, SturmCountAndDiagonalMatrix) {
    fb::SymmetricTridiagonal m{{3.0, 1.0, 2.0}, {0.0, 0.0}};
    EXPECT_EQ(fb::sturm_count(m, 0.5), 0u);
    EXPECT_EQ(fb::sturm_count(m, 1.5), 1u);
    EXPECT_EQ(fb::sturm_count(m, 10.0), 3u);
    const auto ev = fb::lowest_eigenvalues(m, 3);
    EXPECT_NEAR(ev[0], 1.0, 1e-14);
    EXPECT_NEAR(ev[1], 2.0, 1e-14);
    EXPECT_NEAR(ev[2], 3.0, 1e-14);
    EXPECT_THROW(fb::lowest_eigenvalues(m, 4), std::invalid_argument);
}

TEST(Eigensolver, DiscreteLaplacianClosedForm) {
    // tridiag(-1, 2, -1) of size N has eigenvalues 2 - 2 cos(k pi / (N + 1))
    const std::size_t n = 200;
    fb::SymmetricTridiagonal m{std::vector<double>(n, 2.0), std::vector<double>(n - 1, -1.0)};
    const auto ev = fb::lowest_eigenvalues(m, 5);
    for (std::size_t k = 0; k < 5; ++k) {
        const double exact = 2 - 2 * std::cos((k + 1) * std::numbers::pi / (n + 1));
        EXPECT_NEAR(ev[k], exact, 1e-13);
    }
}

TEST(Spectrum, InvariantsEnforced) {
    EXPECT_THROW(fb::Spectrum({{0, 1.0}, {1, 1.0}}), std::invalid_argument);
    EXPECT_THROW(fb::Spectrum({{1, 1.0}, {0, 2.0}}), std::invalid_argument);
    const auto s = fb::formula_spectrum(params(1.0), 3);
    ASSERT_EQ(s.size(), 4u);
    EXPECT_EQ(s[3], (fb::SpectrumEntry{3, 3.5}));
}

TEST(OracleSpectrum, ReferenceExamples) {
    const auto unit = fb::oracle_spectrum(params(1.0), 3);
    ASSERT_EQ(unit.size(), 4u);
    for (int n = 0; n <= 3; ++n) {
        EXPECT_EQ(unit[n].n, n);
        EXPECT_NEAR(unit[n].energy, n + 0.5, 1e-3 * (n + 0.5));
    }

    // F = 1 at alpha = 0.8 with m = hbar = omega = 1
    const auto frac = fb::oracle_spectrum(params(0.8), 3);
    const double expected[] = {0.4, 1.2, 2.0, 2.8};
    for (int n = 0; n <= 3; ++n) {
        EXPECT_NEAR(frac[n].energy, expected[n], 1e-3 * expected[n]);
    }

    fb::EigensolverSpec neumann;
    neumann.boundary = fb::Boundary::neumann;
    const auto even = fb::oracle_spectrum(params(1.0), 2, neumann);
    ASSERT_EQ(even.size(), 3u);
    for (int k = 0; k < 3; ++k) {
        EXPECT_EQ(even[k].n, 2 * k);
        EXPECT_NEAR(even[k].energy, 2 * k + 0.5, 1e-3);
    }
    fb::EigensolverSpec dirichlet;
    dirichlet.boundary = fb::Boundary::dirichlet;
    const auto odd = fb::oracle_spectrum(params(1.0), 2, dirichlet);
    for (int k = 0; k < 3; ++k) {
        EXPECT_EQ(odd[k].n, 2 * k + 1);
    }
}

TEST(OracleSpectrum, SecondOrderConvergence) {
    const auto p = params(0.9, 0.4);
    fb::EigensolverSpec coarse;
    coarse.nodes = 1000;
    fb::EigensolverSpec fine;
    fine.nodes = 2000;
    const auto sc = fb::oracle_spectrum(p, 3, coarse);
    const auto sf = fb::oracle_spectrum(p, 3, fine);
    for (int n = 0; n <= 3; ++n) {
        const double ec = std::abs(sc[n].energy - fb::energy(p, n));
        const double ef = std::abs(sf[n].energy - fb::energy(p, n));
        EXPECT_GT(ec / ef, 3.5) << "n " << n;
        EXPECT_LT(ec / ef, 4.5) << "n " << n;
    }
}

TEST(OracleSpectrum, MergedFamiliesInterleave) {
    const auto p = params(0.85, 0.2);
    const auto both = fb::oracle_spectrum(p, 7);
    for (std::size_t i = 0; i < both.size(); ++i) {
        EXPECT_EQ(both[i].n, static_cast<int>(i));
    }
    fb::EigensolverSpec n_spec;
    n_spec.boundary = fb::Boundary::neumann;
    fb::EigensolverSpec d_spec;
    d_spec.boundary = fb::Boundary::dirichlet;
    const auto even = fb::oracle_spectrum(p, 7, n_spec);
    const auto odd = fb::oracle_spectrum(p, 7, d_spec);
    for (int k = 0; k < 4; ++k) {
        EXPECT_LT(even[k].energy, odd[k].energy);
        if (k + 1 < 4) {
            EXPECT_LT(odd[k].energy, even[k + 1].energy);
        }
    }
}

TEST(OracleSpectrum, MatchesFormulaOnRandomParameters) {
    Rng rng(808);
    for (int trial = 0; trial < 10; ++trial) {
        const auto p = rng.underdamped();
        const auto s = fb::oracle_spectrum(p, 3);
        for (const auto& e : s.entries()) {
            EXPECT_LT(rel_error(e.energy, fb::energy(p, e.n)), 1e-3);
        }
    }
}

TEST(OracleSpectrum, RejectsUnresolvableRequests) {
    fb::EigensolverSpec tiny;
    tiny.z_max = 2.0;
    EXPECT_THROW(fb::oracle_spectrum(params(1.0), 5, tiny), std::invalid_argument);
    fb::EigensolverSpec coarse;
    coarse.nodes = 500;
    coarse.z_max = 400.0;
    EXPECT_THROW(fb::oracle_spectrum(params(1.0), 3, coarse), std::invalid_argument);
    fb::EigensolverSpec few;
    few.nodes = 100;
    EXPECT_THROW(few.validate(), std::invalid_argument);
    EXPECT_THROW(fb::oracle_spectrum(params(1.0, 2.0), 1), std::domain_error);
}

TEST(Normalization, GroundStateGaussianValue) {
    EXPECT_NEAR(fb::normalization_constant(params(1.0), 0), std::sqrt(2 / std::sqrt(std::numbers::pi)),
                1e-10);
}

TEST(Normalization, IndependentOfLambdaAtFixedF) {
    // raise omega with lambda so that Omega, hence F, stays 1
    for (double lambda : {0.3, 1.0}) {
        auto p = params(1.0, lambda);
        p.omega = std::sqrt(1.0 + lambda * lambda / 4);
        for (int n = 0; n <= 3; ++n) {
            EXPECT_NEAR(fb::normalization_constant(p, n), fb::normalization_constant(params(1.0), n),
                        1e-9 * fb::normalization_constant(params(1.0), n));
        }
    }
}

TEST(Normalization, GroundStateScalesWithF) {
    // u = F^(1/2a) y maps the F case onto F = 1
    for (double a : {0.8, 1.0}) {
        auto p = params(a);
        p.mass = 2.3;
        const double F = fb::derived_params(p).F;
        const double b1 = fb::normalization_constant(params(a), 0);
        EXPECT_LE(rel_error(fb::normalization_constant(p, 0), b1 * std::pow(F, 1 / (4 * a))), 1e-9);
    }
}

TEST(Normalization, StableUnderTighterTolerance) {
    fb::QuadratureSpec loose;
    loose.rel_tol = 1e-8;
    fb::QuadratureSpec tight;
    tight.rel_tol = 1e-9;
    for (int n = 0; n <= 3; ++n) {
        const auto p = params(0.85);
        EXPECT_LE(rel_error(fb::normalization_constant(p, n, loose), fb::normalization_constant(p, n, tight)),
                  1e-8);
    }
}

TEST(Normalization, NormalizedStatesIntegrateToOne) {
    for (double a : {0.8, 0.9, 1.0}) {
        for (auto source : {fb::EigenSource::paper_rodriguez, fb::EigenSource::hermite_oracle}) {
            for (int n = 0; n <= 3; ++n) {
                const auto s = fb::make_eigenstate(params(a, 0.4), n, source);
                EXPECT_GT(s.norm, 0.0);
                EXPECT_EQ(s.source, source);
                EXPECT_DOUBLE_EQ(s.energy, fb::energy(params(a, 0.4), n));
                const auto psi = fb::complex(s.norm) * s.wavefunction;
                const double total = fb::integrate_halfline(
                    [&](double y) { return std::norm(fb::evaluate(psi, y)); });
                EXPECT_NEAR(total, 1.0, 1e-6);
            }
        }
    }
}

TEST(FdResidualNorm, ReferenceExamples) {
    const auto g = fb::Grid1D::uniform(0.1, 6.0, 5901);
    const auto p = params(0.9);
    const auto h0 = fb::eigenfunction_hermite(p, 0);
    const auto sampled_h = fb::SampledField::sample_real(g, [&](double y) { return h0(y); });
    EXPECT_LT(fb::fd_residual_norm(sampled_h, p, fb::energy(p, 0), fb::KineticMode::derived), 1e-4);

    const auto paper0 = fb::eigenfunction_paper(p, 0);
    const auto sampled_p = fb::SampledField::sample(g, [&](double y) { return fb::evaluate(paper0, y); });
    EXPECT_LT(fb::fd_residual_norm(sampled_p, p, fb::energy(p, 0), fb::KineticMode::derived), 1e-4);

    const auto junk = fb::SampledField::sample_real(g, [](double y) { return std::sin(3 * y) / (1 + y); });
    EXPECT_GT(fb::fd_residual_norm(junk, p, fb::energy(p, 0), fb::KineticMode::derived), 0.1);

    const auto small = fb::SampledField::sample_real(fb::Grid1D::uniform(1, 2, 6), [](double y) { return y; });
    EXPECT_THROW(fb::fd_residual_norm(small, p, 1.0, fb::KineticMode::derived), std::invalid_argument);
}
