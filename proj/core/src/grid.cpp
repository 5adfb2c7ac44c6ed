#include "rpl/grid.hpp"

#include <cmath>

#include "rpl/errors.hpp"

namespace rpl {

double norm(const Vec2& v) { return std::hypot(v.x, v.y); }

Grid::Grid(int cells_per_side) : n_(cells_per_side), h_(1.0 / cells_per_side) {
    if (cells_per_side < 2)
        throw InvalidParameter("grid needs at least 2 cells per side, got " +
                               std::to_string(cells_per_side));
}

Vec2 Grid::node_position(int idx) const {
    const int i = idx % (n_ + 1);
    const int j = idx / (n_ + 1);
    return {i * h_, j * h_};
}

bool Grid::on_boundary(int idx) const {
    const int i = idx % (n_ + 1);
    const int j = idx / (n_ + 1);
    return i == 0 || j == 0 || i == n_ || j == n_;
}

std::array<int, 3> Grid::triangle_nodes(int t) const {
    const int cell = t / 2;
    const int i = cell % n_;
    const int j = cell / n_;
    const int v00 = node_index(i, j);
    const int v10 = node_index(i + 1, j);
    const int v11 = node_index(i + 1, j + 1);
    const int v01 = node_index(i, j + 1);
    if (t % 2 == 0)
        return {v00, v10, v11};
    return {v00, v11, v01};
}

std::array<Vec2, 3> Grid::triangle_vertices(int t) const {
    const auto nodes = triangle_nodes(t);
    return {node_position(nodes[0]), node_position(nodes[1]), node_position(nodes[2])};
}

std::array<Vec2, 3> Grid::hat_gradients(int t) const {
    // grad of hat_k on a triangle with CCW vertices P0 P1 P2 is
    // perp(P_{k+2} - P_{k+1}) / (2 area), perp(v) = (-v.y, v.x)
    const auto P = triangle_vertices(t);
    const double inv2a = 1.0 / (2.0 * triangle_area());
    auto g = [&](const Vec2& a, const Vec2& b) {
        const Vec2 e = b - a;
        return Vec2{-e.y * inv2a, e.x * inv2a};
    };
    return {g(P[1], P[2]), g(P[2], P[0]), g(P[0], P[1])};
}

Vec2 Grid::centroid(int t) const {
    const auto P = triangle_vertices(t);
    return {(P[0].x + P[1].x + P[2].x) / 3.0, (P[0].y + P[1].y + P[2].y) / 3.0};
}

} // namespace rpl
