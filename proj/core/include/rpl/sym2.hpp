#pragma once

#include <array>

#include "rpl/grid.hpp"

namespace rpl {

/// Symmetric 2x2 matrix, stored as the upper triangle.
struct SymMatrix2 {
    double a11 = 1.0;
    double a12 = 0.0;
    double a22 = 1.0;

    static SymMatrix2 identity() { return {1.0, 0.0, 1.0}; }

    Vec2 apply(const Vec2& v) const { return {a11 * v.x + a12 * v.y, a12 * v.x + a22 * v.y}; }
    double quad(const Vec2& v) const { return dot(apply(v), v); }

    /// Eigenvalues, ascending.
    std::array<double, 2> eigenvalues() const;
    /// Spectral norm of (this - I).
    double deviation_from_identity() const;
};

} // namespace rpl
