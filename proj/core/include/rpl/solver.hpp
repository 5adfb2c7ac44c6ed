#pragma once

#include <vector>

#include "rpl/plaplace_operator.hpp"
#include "rpl/zygmund.hpp"

namespace rpl {

struct SolveOptions {
    enum class Start { Lifted, Zero, Random, Given };

    int max_newton = 200;    // damped steps in total, across continuation levels
    int max_inner = 10000;   // conjugate-gradient iterations per tangent solve
    double delta_min = 1e-8; // continuation endpoint for the regularization
    Start start = Start::Lifted;
    unsigned seed = 0;                    // Start::Random
    const ScalarField* initial = nullptr; // Start::Given
};

struct SolveResult {
    ScalarField u;
    int iterations = 0;
    double residual = 0.0; // max-norm of the final interior weak residual
    double energy = 0.0;
};

/// Minimize the Dirichlet energy of the flux map over interior nodal values
/// with the given boundary trace: damped Newton (Armijo backtracking, c1 =
/// 1e-4) under regularization continuation delta = 1, 1/2, ... down to
/// delta_min, each tangent system solved by preconditioned conjugate
/// gradients.  Succeeds when the interior weak residual of the *unregularized*
/// spec satisfies max <= tol * (1 + max |f|); otherwise throws SolverFailure
/// carrying the best iterate.
SolveResult solve_dirichlet(const OperatorSpec& spec, const VectorField& f,
                            const ScalarField& boundary, double tol = 1e-10,
                            const SolveOptions& opts = {});

/// divergence_weak(flux of grad u) - divergence_weak(f) at interior nodes,
/// zero on the boundary.
ScalarField weak_residual(const OperatorSpec& spec, const ScalarField& u,
                          const VectorField& f);

/// Magnitude truncation f * min(1, level/|f|), the natural approximating
/// family for rough data.
VectorField truncate_magnitude(const VectorField& f, double level);

/// Solve against truncations of f at the given increasing levels and record,
/// for each consecutive pair, the gradient-difference and data-difference
/// norms raised to their natural powers.  Gradient increments use the
/// exponent-p analogue of the data-side parameters.
struct CauchyRow {
    double level_lo = 0.0;
    double level_hi = 0.0;
    double grad_increment = 0.0; // zygmund(|grad u_hi - grad u_lo|)^p
    double data_increment = 0.0; // zygmund(|f_hi - f_lo|)^q
};

std::vector<CauchyRow> cauchy_probe(const OperatorSpec& spec, const VectorField& f,
                                    const std::vector<double>& levels,
                                    const ZygmundParams& data_params, double tol = 1e-10);

} // namespace rpl
