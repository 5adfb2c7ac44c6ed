#pragma once

#include <string>
#include <vector>

#include "rpl/fields.hpp"

namespace rpl {

/// Deterministic recipes for solver data living at or beyond the borderline
/// integrability the solver is probed with.
///
///   point-singularity   radial field |x-x0|^{-beta} log^{-s}(e + 1/|x-x0|)
///                       times the unit radial direction, sampled at centroids
///   counterexample-lift the unit-Luxemburg spike construction lifted to a
///                       vector field: height e^{1/eps} in a fixed direction
///                       on roughly the matching number of whole triangles
///   smooth-random       seeded band-limited trigonometric field, evaluable
///                       on any grid (coefficients depend only on the seed)
struct RoughRecipe {
    enum class Kind { PointSingularity, CounterexampleLift, SmoothRandom };

    Kind kind = Kind::SmoothRandom;
    double amplitude = 1.0;
    // point-singularity
    double beta = 1.0;
    double s = 0.0;
    Vec2 x0 = {0.5, 0.5};
    // counterexample-lift
    double eps = 0.1;
    double q = 1.5;
    double alpha = 1.0;
    // smooth-random
    unsigned seed = 0;
    int modes = 4;

    /// Parse "kind:key=val,key=val" as accepted by the CLI --rough flag.
    static RoughRecipe parse(const std::string& text);
};

VectorField rough_field(const RoughRecipe& recipe, const Grid& grid);

/// Seeded heavy-tailed per-triangle magnitudes (lognormal, standard deviation
/// sigma in log space) for the norm-equivalence batteries.
std::vector<double> lognormal_triangle_values(const Grid& grid, unsigned seed, double sigma);

} // namespace rpl
