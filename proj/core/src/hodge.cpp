#include "rpl/hodge.hpp"

#include <cmath>

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCore>

#include "rpl/errors.hpp"
#include "rpl/norms.hpp"

namespace rpl {

ScalarField solve_spd_system(const Grid& grid, const std::vector<SymMatrix2>& weights,
                             const ScalarField& rhs, const ScalarField& boundary,
                             double rel_tol, int max_iters, SpdSolveInfo* info) {
    require_same_grid(grid, rhs.grid(), "spd solve rhs");
    require_same_grid(grid, boundary.grid(), "spd solve boundary");
    if (static_cast<int>(weights.size()) != grid.triangle_count())
        throw InvalidParameter("spd solve needs one weight matrix per triangle");

    const int nn = grid.node_count();
    std::vector<int> interior_of(nn, -1);
    int ni = 0;
    for (int k = 0; k < nn; ++k)
        if (!grid.on_boundary(k)) interior_of[k] = ni++;

    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<size_t>(grid.triangle_count()) * 9);
    Eigen::VectorXd b(ni);
    for (int k = 0; k < nn; ++k)
        if (interior_of[k] >= 0) b[interior_of[k]] = rhs[k];

    const double area = grid.triangle_area();
    for (int t = 0; t < grid.triangle_count(); ++t) {
        const auto nodes = grid.triangle_nodes(t);
        const auto hats = grid.hat_gradients(t);
        const SymMatrix2& W = weights[t];
        for (int r = 0; r < 3; ++r) {
            const int ir = interior_of[nodes[r]];
            if (ir < 0) continue;
            const Vec2 wgr = W.apply(hats[r]);
            for (int c = 0; c < 3; ++c) {
                const double kij = area * dot(wgr, hats[c]);
                const int ic = interior_of[nodes[c]];
                if (ic >= 0)
                    trips.emplace_back(ir, ic, kij);
                else
                    b[ir] -= kij * boundary[nodes[c]];
            }
        }
    }

    Eigen::SparseMatrix<double> K(ni, ni);
    K.setFromTriplets(trips.begin(), trips.end());

    Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper,
                             Eigen::IncompleteCholesky<double>>
        cg;
    cg.setTolerance(rel_tol);
    cg.setMaxIterations(max_iters);
    cg.compute(K);
    Eigen::VectorXd x = cg.solve(b);

    if (info) {
        info->iterations = static_cast<int>(cg.iterations());
        info->rel_residual = cg.error();
        info->converged = (cg.info() == Eigen::Success);
    }

    ScalarField u = boundary;
    for (int k = 0; k < nn; ++k)
        if (interior_of[k] >= 0) u[k] = x[interior_of[k]];
    return u;
}

ScalarField poisson_solve(const ScalarField& rhs, double rel_tol, int max_iters) {
    const Grid& g = rhs.grid();
    std::vector<SymMatrix2> ident(static_cast<size_t>(g.triangle_count()),
                                  SymMatrix2::identity());
    SpdSolveInfo info;
    ScalarField u =
        solve_spd_system(g, ident, rhs, ScalarField(g), rel_tol, max_iters, &info);
    if (!info.converged)
        throw SolverFailure("Poisson solve hit the iteration cap at relative residual " +
                                std::to_string(info.rel_residual),
                            info.rel_residual, info.iterations, u.values());
    return u;
}

HodgeResult hodge_decompose(const VectorField& F, double rel_tol) {
    const Grid& g = F.grid();
    ScalarField phi = poisson_solve(divergence_weak(F), rel_tol);
    VectorField h = F;
    h -= gradient(phi);
    const ScalarField defect = divergence_weak(h);
    double residual = 0.0;
    for (int k = 0; k < g.node_count(); ++k)
        if (!g.on_boundary(k)) residual = std::max(residual, std::fabs(defect[k]));
    return {std::move(phi), std::move(h), residual};
}

HodgeProbe hodge_ratio_probe(const VectorField& G, double eps, double p) {
    if (!(p > 2.0)) throw InvalidParameter("ratio probe needs p > 2");
    if (!(eps > 0.0 && eps * p < 1.0))
        throw InvalidParameter("ratio probe needs 0 < eps p < 1");
    const Grid& g = G.grid();
    VectorField F(g);
    bool any = false;
    for (int t = 0; t < g.triangle_count(); ++t) {
        const double m = norm(G[t]);
        if (m > 0.0) {
            F[t] = std::pow(m, -eps * p) * G[t];
            any = true;
        }
    }
    if (!any) throw InvalidParameter("ratio probe needs a nonzero field");

    HodgeProbe probe{0.0, 0.0, (p - eps * p) / (1.0 - eps * p), hodge_decompose(F)};
    const double base =
        std::pow(lebesgue_avg_norm(SampleSet::from_magnitudes(G), p - eps * p), 1.0 - eps * p);
    probe.r1 =
        lebesgue_avg_norm(SampleSet::from_magnitudes(gradient(probe.parts.phi)), probe.s) / base;
    probe.r2 =
        lebesgue_avg_norm(SampleSet::from_magnitudes(probe.parts.h), probe.s) / (eps * base);
    return probe;
}

} // namespace rpl
