#include "rpl/calculus.hpp"

#include "rpl/errors.hpp"

namespace rpl {

VectorField gradient(const ScalarField& u) {
    const Grid& g = u.grid();
    VectorField out(g);
    for (int t = 0; t < g.triangle_count(); ++t) {
        const auto nodes = g.triangle_nodes(t);
        const auto hats = g.hat_gradients(t);
        Vec2 gr{};
        for (int k = 0; k < 3; ++k) gr += u[nodes[k]] * hats[k];
        out[t] = gr;
    }
    return out;
}

ScalarField divergence_weak(const VectorField& F) {
    const Grid& g = F.grid();
    ScalarField r(g);
    const double area = g.triangle_area();
    for (int t = 0; t < g.triangle_count(); ++t) {
        const auto nodes = g.triangle_nodes(t);
        const auto hats = g.hat_gradients(t);
        for (int k = 0; k < 3; ++k) r[nodes[k]] += area * dot(F[t], hats[k]);
    }
    return r;
}

double average_integral(const Grid& grid, const std::vector<double>& triangle_samples) {
    if (static_cast<int>(triangle_samples.size()) != grid.triangle_count())
        throw InvalidParameter("average_integral needs one sample per triangle");
    const double area = grid.triangle_area();
    double sum = 0.0;
    for (double v : triangle_samples) sum += v;
    return area * sum;
}

double interior_dot(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a.grid(), b.grid(), "interior_dot");
    const Grid& g = a.grid();
    double s = 0.0;
    for (int k = 0; k < g.node_count(); ++k)
        if (!g.on_boundary(k)) s += a[k] * b[k];
    return s;
}

} // namespace rpl
