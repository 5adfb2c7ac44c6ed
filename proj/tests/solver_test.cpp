#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "rpl/calculus.hpp"
#include "rpl/errors.hpp"
#include "rpl/hodge.hpp"
#include "rpl/norms.hpp"
#include "rpl/rough_fields.hpp"
#include "rpl/solver.hpp"

#include "reference.hpp"

using namespace rpl;

namespace {

// Reference-route value: dense long double elimination of the five-point
// system at n=8 with every interior functional equal to one, center node.
constexpr double kPoissonCenter = 4.65808823529411765;

ScalarField interior_ones(const Grid& grid) {
    ScalarField r(grid);
    for (int i = 0; i < r.size(); ++i)
        if (!grid.on_boundary(i)) r[i] = 1.0;
    return r;
}

VectorField smooth_field(const Grid& grid, unsigned seed, double amplitude = 1.0) {
    return rough_field(RoughRecipe{.kind = RoughRecipe::Kind::SmoothRandom,
                                   .amplitude = amplitude,
                                   .seed = seed},
                       grid);
}

double sup_diff(const ScalarField& a, const ScalarField& b) {
    double m = 0.0;
    for (int i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

} // namespace

TEST_CASE("poisson solve hits the dense-elimination value at the center") {
    const Grid grid(8);
    const ScalarField u = poisson_solve(interior_ones(grid));
    CHECK(u[grid.node_index(4, 4)] == doctest::Approx(kPoissonCenter).epsilon(1e-10));
}

TEST_CASE("poisson solve matches dense elimination on every node") {
    const int n = 6;
    const Grid grid(n);
    ScalarField rhs(grid);
    std::mt19937 rng(4);
    std::normal_distribution<double> gauss;
    std::vector<long double> dense_rhs;
    for (int j = 1; j < n; ++j)
        for (int i = 1; i < n; ++i) {
            const double v = gauss(rng);
            rhs[grid.node_index(i, j)] = v;
            dense_rhs.push_back(v);
        }
    const ScalarField u = poisson_solve(rhs);
    const auto dense = refimpl::poisson_dense(n, dense_rhs);
    for (int j = 1; j < n; ++j)
        for (int i = 1; i < n; ++i)
            CHECK(u[grid.node_index(i, j)] ==
                  doctest::Approx(static_cast<double>(dense[(j - 1) * (n - 1) + (i - 1)]))
                      .epsilon(1e-10));
    for (int i = 0; i < u.size(); ++i)
        if (grid.on_boundary(i)) CHECK(u[i] == 0.0);
}

TEST_CASE("poisson solve reports the iteration cap") {
    const Grid grid(8);
    CHECK_THROWS_AS(poisson_solve(interior_ones(grid), 1e-12, 1), SolverFailure);
}

TEST_CASE("weighted SPD solve satisfies its weak equation") {
    const Grid grid(10);
    const SymMatrix2 W{1.3, 0.2, 0.8};
    std::vector<SymMatrix2> weights(static_cast<size_t>(grid.triangle_count()), W);
    ScalarField rhs(grid);
    std::mt19937 rng(8);
    std::normal_distribution<double> gauss;
    for (int i = 0; i < rhs.size(); ++i)
        if (!grid.on_boundary(i)) rhs[i] = gauss(rng);
    const ScalarField boundary =
        ScalarField::sample(grid, [](double x, double y) { return x - 0.5 * y; });

    SpdSolveInfo info;
    const ScalarField u = solve_spd_system(grid, weights, rhs, boundary, 1e-12, 10000, &info);
    CHECK(info.converged);
    CHECK(info.rel_residual <= 1e-12);
    for (int i = 0; i < u.size(); ++i)
        if (grid.on_boundary(i)) CHECK(u[i] == boundary[i]);

    VectorField flux = gradient(u);
    for (int t = 0; t < flux.size(); ++t) flux[t] = W.apply(flux[t]);
    const ScalarField defect = divergence_weak(flux);
    for (int i = 0; i < u.size(); ++i)
        if (!grid.on_boundary(i)) CHECK(defect[i] == doctest::Approx(rhs[i]).epsilon(1e-9));
}

TEST_CASE("p=2 dirichlet solve reduces to the poisson route") {
    const Grid grid(16);
    const VectorField f = smooth_field(grid, 3);
    const SolveResult res = solve_dirichlet(OperatorSpec::identity(2.0), f, ScalarField(grid));
    const ScalarField via_poisson = poisson_solve(divergence_weak(f));
    CHECK(sup_diff(res.u, via_poisson) <= 1e-9);
}

TEST_CASE("manufactured interpolant is recovered to solver accuracy") {
    for (int n : {16, 32}) {
        const Grid grid(n);
        const ScalarField w = ScalarField::sample(grid, [](double x, double y) {
            return std::sin(M_PI * x) * std::sin(M_PI * y);
        });
        const OperatorSpec spec = OperatorSpec::identity(3.0);
        const VectorField f = apply_operator(spec, gradient(w));
        const SolveResult res = solve_dirichlet(spec, f, ScalarField(grid), 1e-10);
        CAPTURE(n);
        CHECK(sup_diff(res.u, w) <= 1e-8);
        CHECK(res.residual <= 1e-10 * (1.0 + f.max_magnitude()));
    }
}

TEST_CASE("affine boundary with no load reproduces the affine field") {
    const Grid grid(12);
    const ScalarField affine =
        ScalarField::sample(grid, [](double x, double y) { return 0.7 * x - 0.2 * y; });
    const SolveResult res =
        solve_dirichlet(OperatorSpec::identity(3.0), VectorField(grid), affine, 1e-12);
    CHECK(sup_diff(res.u, affine) <= 1e-10);
}

TEST_CASE("solution scales like the p-homogeneity law") {
    const Grid grid(8);
    const double p = 3.0, lam = 2.0;
    const VectorField f = smooth_field(grid, 6);
    const VectorField f_scaled = f * std::pow(lam, p - 1.0);
    const SolveResult a = solve_dirichlet(OperatorSpec::identity(p), f, ScalarField(grid), 1e-12);
    const SolveResult b =
        solve_dirichlet(OperatorSpec::identity(p), f_scaled, ScalarField(grid), 1e-12);
    ScalarField scaled = a.u;
    scaled *= lam;
    CHECK(sup_diff(b.u, scaled) <= 1e-7);
}

TEST_CASE("different starts reach the same minimizer") {
    const Grid grid(12);
    const VectorField f = smooth_field(grid, 14);
    const OperatorSpec spec = OperatorSpec::identity(3.0);
    SolveOptions zero;
    zero.start = SolveOptions::Start::Zero;
    SolveOptions random;
    random.start = SolveOptions::Start::Random;
    random.seed = 99;
    const SolveResult a = solve_dirichlet(spec, f, ScalarField(grid), 1e-10, zero);
    const SolveResult b = solve_dirichlet(spec, f, ScalarField(grid), 1e-10, random);
    CHECK(sup_diff(a.u, b.u) <= 1e-8);

    SUBCASE("same seed is bitwise reproducible") {
        const SolveResult c = solve_dirichlet(spec, f, ScalarField(grid), 1e-10, random);
        CHECK(sup_diff(b.u, c.u) == 0.0);
    }
}

TEST_CASE("solver certifies energy and residual claims") {
    const Grid grid(10);
    const VectorField f = smooth_field(grid, 20);
    const OperatorSpec spec = OperatorSpec::identity(3.0);
    const double tol = 1e-10;
    const SolveResult res = solve_dirichlet(spec, f, ScalarField(grid), tol);
    CHECK(res.energy == doctest::Approx(energy(spec, res.u, f)).epsilon(1e-12));
    // zero interior values are feasible, so the minimum is not above their energy
    CHECK(res.energy <= energy(spec, ScalarField(grid), f) + 1e-12);
    // recompute the claimed residual from the fields
    const ScalarField defect = weak_residual(spec, res.u, f);
    CHECK(defect.max_abs() == doctest::Approx(res.residual).epsilon(1e-12));
    CHECK(res.residual <= tol * (1.0 + f.max_magnitude()));
    CHECK(res.iterations > 0);
}

TEST_CASE("warm start from the solution converges immediately") {
    const Grid grid(10);
    const VectorField f = smooth_field(grid, 25);
    const OperatorSpec spec = OperatorSpec::identity(3.0);
    const SolveResult cold = solve_dirichlet(spec, f, ScalarField(grid), 1e-10);
    SolveOptions warm;
    warm.start = SolveOptions::Start::Given;
    warm.initial = &cold.u;
    const SolveResult again = solve_dirichlet(spec, f, ScalarField(grid), 1e-10, warm);
    CHECK(again.iterations == 0);
    CHECK(sup_diff(again.u, cold.u) <= 1e-9);
}

TEST_CASE("failure carries the best iterate") {
    const Grid grid(6);
    const VectorField f = smooth_field(grid, 2);
    SolveOptions opts;
    opts.max_newton = 2;
    try {
        solve_dirichlet(OperatorSpec::identity(3.0), f, ScalarField(grid), 1e-14, opts);
        FAIL("expected SolverFailure");
    } catch (const SolverFailure& e) {
        CHECK(e.iterations >= 1);
        CHECK(e.residual > 0.0);
        CHECK(static_cast<int>(e.best_iterate.size()) == grid.node_count());
    }
}

TEST_CASE("magnitude truncation caps and preserves direction") {
    const Grid grid(6);
    const VectorField f = smooth_field(grid, 33, 5.0);
    const double level = 0.5 * f.max_magnitude();
    const VectorField cut = truncate_magnitude(f, level);
    for (int t = 0; t < f.size(); ++t) {
        const double m0 = norm(f[t]), m1 = norm(cut[t]);
        CHECK(m1 <= level * (1.0 + 1e-14));
        CHECK(m1 == doctest::Approx(std::min(m0, level)).epsilon(1e-13));
        CHECK(std::fabs(f[t].x * cut[t].y - f[t].y * cut[t].x) <= 1e-12 * m0 * m0);
    }
    const VectorField same = truncate_magnitude(f, 2.0 * f.max_magnitude());
    for (int t = 0; t < f.size(); ++t) {
        CHECK(same[t].x == f[t].x);
        CHECK(same[t].y == f[t].y);
    }
}

TEST_CASE("linear theory contracts data differences") {
    const Grid grid(12);
    const VectorField f = smooth_field(grid, 40);
    const VectorField g = f + smooth_field(grid, 41, 0.1);
    const OperatorSpec spec = OperatorSpec::identity(2.0);
    const SolveResult uf = solve_dirichlet(spec, f, ScalarField(grid), 1e-12);
    const SolveResult ug = solve_dirichlet(spec, g, ScalarField(grid), 1e-12);
    const double lhs =
        lebesgue_avg_norm(SampleSet::from_magnitudes(gradient(uf.u) - gradient(ug.u)), 2.0);
    const double rhs = lebesgue_avg_norm(SampleSet::from_magnitudes(f - g), 2.0);
    CHECK(lhs <= rhs * (1.0 + 1e-6) + 1e-12);
}

TEST_CASE("truncation ladder produces shrinking increments") {
    const Grid grid(16);
    const VectorField f = rough_field(
        RoughRecipe{.kind = RoughRecipe::Kind::PointSingularity, .beta = 0.8}, grid);
    const OperatorSpec spec = OperatorSpec::identity(3.0);
    const auto rows = cauchy_probe(spec, f, {2.0, 4.0, 8.0, 16.0}, ZygmundParams(1.5, 1.0));
    REQUIRE(rows.size() == 3);
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].grad_increment > 0.0);
        CHECK(rows[i].data_increment > 0.0);
        if (i > 0) {
            CHECK(rows[i].grad_increment < rows[i - 1].grad_increment);
            CHECK(rows[i].data_increment < rows[i - 1].data_increment);
        }
    }
}
