#pragma once

#include <vector>

#include "rpl/fields.hpp"
#include "rpl/sym2.hpp"

namespace rpl {

/// The flux map  xi -> (<A(x) xi, xi> + delta^2)^{(p-2)/2} A(x) xi  on each
/// triangle, with A symmetric and spectrally pinned inside
/// [a_ell^{2/p}, b_ell^{2/p}].  An empty coefficient vector means A = I
/// everywhere.
struct OperatorSpec {
    double p = 2.0;
    double a_ell = 1.0;
    double b_ell = 1.0;
    double delta_reg = 0.0;
    std::vector<SymMatrix2> A;

    static OperatorSpec identity(double p, double delta_reg = 0.0);
    static OperatorSpec with_coefficient(double p, std::vector<SymMatrix2> A, double a_ell,
                                         double b_ell, double delta_reg = 0.0);

    /// Check exponent/constant ranges and the per-triangle eigenvalue bounds;
    /// throws InvalidParameter.  Grid needed only to match the coefficient size.
    void validate(const Grid& grid) const;

    const SymMatrix2& coef(int t) const;
    bool identity_coefficient() const { return A.empty(); }
};

/// Flux at one triangle.
Vec2 operator_eval(const OperatorSpec& spec, int t, const Vec2& xi);

/// Flux applied to a whole per-triangle field.
VectorField apply_operator(const OperatorSpec& spec, const VectorField& xi);

/// ess sup of (1 + |A - I|)^{p/2}; exactly 1 iff A = I a.e.
double characteristic(const OperatorSpec& spec, const Grid& grid);

/// Randomized verification of the growth/monotonicity structure.
/// Coercivity <A(xi), xi> >= a |xi|^p is checked exactly.  The monotonicity
/// lower bound is checked against a * kappa_p with kappa_p = 2^{2-p}/(p-1),
/// the rigorous p-dependent constant for this operator class (the bare
/// constant a is unattainable for p > 2: perpendicular xi, eta realize the
/// ratio 2^{2-p}).  The Lipschitz-type constant is reported empirically.
struct StructureReport {
    int samples = 0;
    double kappa_p = 1.0;
    double min_coercivity_ratio = 0.0;    // vs a |xi|^p, hard check >= 1 - 1e-12
    double min_monotonicity_ratio = 0.0;  // vs a kappa_p base, hard check >= 1 - 1e-12
    double min_monotonicity_vs_a = 0.0;   // vs a base, informational
    double max_lipschitz_factor = 0.0;    // |A xi - A eta| / (b |xi-eta| (|xi|+|eta|)^{p-2})
};

StructureReport structure_check(const OperatorSpec& spec, const Grid& grid,
                                int n_samples = 100000, unsigned seed = 12345);

/// Dirichlet energy  integral of (1/p)(<A grad u, grad u> + delta^2)^{p/2}
/// minus <f, grad u>;  solve_dirichlet minimizes this over the interior values.
double energy(const OperatorSpec& spec, const ScalarField& u, const VectorField& f);

} // namespace rpl
