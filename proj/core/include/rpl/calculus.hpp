#pragma once

#include <vector>

#include "rpl/fields.hpp"

namespace rpl {

/// Piecewise-constant gradient of the piecewise-linear interpolant of u.
VectorField gradient(const ScalarField& u);

/// Nodal functional r[i] = sum over triangles of area * <F, grad hat_i>.
/// Adjoint to gradient by construction: <r, u> equals the integral of
/// <F, grad u> exactly (same sums, same order) for u vanishing on the boundary.
ScalarField divergence_weak(const VectorField& F);

/// Integral of per-triangle samples over the unit square (total measure 1).
double average_integral(const Grid& grid, const std::vector<double>& triangle_samples);

/// Nodal dot product restricted to interior nodes.
double interior_dot(const ScalarField& a, const ScalarField& b);

} // namespace rpl
