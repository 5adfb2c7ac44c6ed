#include "rpl/fields.hpp"

#include <cmath>

#include "rpl/errors.hpp"

namespace rpl {

void require_same_grid(const Grid& a, const Grid& b, const char* what) {
    if (a != b)
        throw InvalidParameter(std::string(what) + ": grids differ (" +
                               std::to_string(a.cells()) + " vs " + std::to_string(b.cells()) +
                               " cells per side)");
}

ScalarField::ScalarField(Grid grid, double fill)
    : grid_(grid), values_(static_cast<size_t>(grid.node_count()), fill) {}

ScalarField::ScalarField(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != grid_.node_count())
        throw InvalidParameter("scalar field needs " + std::to_string(grid_.node_count()) +
                               " nodal values, got " + std::to_string(values_.size()));
}

ScalarField ScalarField::sample(const Grid& grid, const std::function<double(double, double)>& f) {
    ScalarField out(grid);
    for (int k = 0; k < grid.node_count(); ++k) {
        const Vec2 p = grid.node_position(k);
        out[k] = f(p.x, p.y);
    }
    return out;
}

double ScalarField::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::fabs(v));
    return m;
}

ScalarField& ScalarField::operator+=(const ScalarField& o) {
    require_same_grid(grid_, o.grid_, "scalar field sum");
    for (size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) {
    require_same_grid(grid_, o.grid_, "scalar field difference");
    for (size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
}

ScalarField& ScalarField::operator*=(double s) {
    for (double& v : values_) v *= s;
    return *this;
}

ScalarField operator-(ScalarField a, const ScalarField& b) {
    a -= b;
    return a;
}

VectorField::VectorField(Grid grid, Vec2 fill)
    : grid_(grid), values_(static_cast<size_t>(grid.triangle_count()), fill) {}

VectorField::VectorField(Grid grid, std::vector<Vec2> values)
    : grid_(grid), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != grid_.triangle_count())
        throw InvalidParameter("vector field needs " + std::to_string(grid_.triangle_count()) +
                               " triangle values, got " + std::to_string(values_.size()));
}

VectorField VectorField::sample(const Grid& grid, const std::function<Vec2(double, double)>& f) {
    VectorField out(grid);
    for (int t = 0; t < grid.triangle_count(); ++t) {
        const Vec2 c = grid.centroid(t);
        out[t] = f(c.x, c.y);
    }
    return out;
}

std::vector<double> VectorField::magnitudes() const {
    std::vector<double> m(values_.size());
    for (size_t t = 0; t < values_.size(); ++t) m[t] = norm(values_[t]);
    return m;
}

double VectorField::max_magnitude() const {
    double m = 0.0;
    for (const Vec2& v : values_) m = std::max(m, norm(v));
    return m;
}

VectorField& VectorField::operator+=(const VectorField& o) {
    require_same_grid(grid_, o.grid_, "vector field sum");
    for (size_t t = 0; t < values_.size(); ++t) values_[t] += o.values_[t];
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
    require_same_grid(grid_, o.grid_, "vector field difference");
    for (size_t t = 0; t < values_.size(); ++t) values_[t] -= o.values_[t];
    return *this;
}

VectorField& VectorField::operator*=(double s) {
    for (Vec2& v : values_) v *= s;
    return *this;
}

VectorField operator-(VectorField a, const VectorField& b) {
    a -= b;
    return a;
}

VectorField operator+(VectorField a, const VectorField& b) {
    a += b;
    return a;
}

VectorField operator*(VectorField a, double s) {
    a *= s;
    return a;
}

} // namespace rpl
