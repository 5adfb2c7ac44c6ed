#pragma once

#include <vector>

#include "rpl/calculus.hpp"
#include "rpl/fields.hpp"
#include "rpl/sym2.hpp"

namespace rpl {

/// Result of one conjugate-gradient solve of an assembled SPD system.
struct SpdSolveInfo {
    int iterations = 0;
    double rel_residual = 0.0;
    bool converged = false;
};

/// Solve the weighted Poisson problem: find u with u = boundary on the edge
/// nodes and, at every interior node i,
///   sum_T area * <W_T grad u, grad hat_i> = rhs[i].
/// Weights are per-triangle SPD matrices (pass identity weights for the plain
/// Laplacian).  Conjugate gradient with incomplete-Cholesky preconditioning,
/// relative residual rel_tol, at most max_iters iterations.
ScalarField solve_spd_system(const Grid& grid, const std::vector<SymMatrix2>& weights,
                             const ScalarField& rhs, const ScalarField& boundary,
                             double rel_tol, int max_iters, SpdSolveInfo* info = nullptr);

/// Plain-Laplacian specialization with zero boundary values; throws
/// SolverFailure if the iteration cap is hit.  rhs is a nodal functional
/// (only interior entries are used).
ScalarField poisson_solve(const ScalarField& rhs, double rel_tol = 1e-12,
                          int max_iters = 10000);

/// Orthogonal splitting F = grad(phi) + h with phi vanishing on the boundary
/// and h weakly divergence-free: phi solves the Poisson problem with the weak
/// divergence of F as data, and h is the remainder.  residual is the largest
/// interior defect of the weak divergence of h.
struct HodgeResult {
    ScalarField phi;
    VectorField h;
    double residual = 0.0;
};

HodgeResult hodge_decompose(const VectorField& F, double rel_tol = 1e-12);

/// Decompose |G|^{-eps p} G and compare both parts against the natural scale
/// of G: r1 = |grad phi|_s / |G|_{p-eps p}^{1-eps p} and
/// r2 = |h|_s / (eps |G|_{p-eps p}^{1-eps p}) with s = (p-eps p)/(1-eps p).
struct HodgeProbe {
    double r1 = 0.0;
    double r2 = 0.0;
    double s = 0.0;
    HodgeResult parts;
};

HodgeProbe hodge_ratio_probe(const VectorField& G, double eps, double p);

} // namespace rpl
