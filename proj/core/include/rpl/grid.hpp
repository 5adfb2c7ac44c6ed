#pragma once

#include <array>

namespace rpl {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x, double y) : x(x), y(y) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
    Vec2& operator*=(double s) { x *= s; y *= s; return *this; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }
inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
double norm(const Vec2& v);

/// Uniform triangulation of the unit square: n x n cells, each split by the
/// diagonal from its lower-left to its upper-right corner.  Nodes are indexed
/// j*(n+1)+i, triangles 2*(j*n+i)+k with k=0 the lower-right half and k=1 the
/// upper-left half.  All triangles have area h^2/2 and the total measure is 1.
class Grid {
public:
    explicit Grid(int cells_per_side);

    int cells() const { return n_; }
    double mesh_size() const { return h_; }
    int node_count() const { return (n_ + 1) * (n_ + 1); }
    int triangle_count() const { return 2 * n_ * n_; }
    int interior_count() const { return (n_ - 1) * (n_ - 1); }
    double triangle_area() const { return 0.5 * h_ * h_; }

    int node_index(int i, int j) const { return j * (n_ + 1) + i; }
    Vec2 node_position(int idx) const;
    bool on_boundary(int idx) const;

    std::array<int, 3> triangle_nodes(int t) const;
    std::array<Vec2, 3> triangle_vertices(int t) const;
    /// Gradients of the three nodal hat functions restricted to triangle t,
    /// ordered like triangle_nodes(t).
    std::array<Vec2, 3> hat_gradients(int t) const;
    Vec2 centroid(int t) const;

    bool operator==(const Grid& o) const { return n_ == o.n_; }
    bool operator!=(const Grid& o) const { return n_ != o.n_; }

private:
    int n_;
    double h_;
};

} // namespace rpl
