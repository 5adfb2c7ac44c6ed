#pragma once

#include <functional>
#include <vector>

#include "rpl/grid.hpp"

namespace rpl {

/// Nodal values on the grid, one double per node.
class ScalarField {
public:
    ScalarField(Grid grid, double fill = 0.0);
    ScalarField(Grid grid, std::vector<double> values);

    /// Sample f(x, y) at every node.
    static ScalarField sample(const Grid& grid, const std::function<double(double, double)>& f);

    const Grid& grid() const { return grid_; }
    int size() const { return static_cast<int>(values_.size()); }
    double operator[](int i) const { return values_[i]; }
    double& operator[](int i) { return values_[i]; }
    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    double max_abs() const;

    ScalarField& operator+=(const ScalarField& o);
    ScalarField& operator-=(const ScalarField& o);
    ScalarField& operator*=(double s);

private:
    Grid grid_;
    std::vector<double> values_;
};

ScalarField operator-(ScalarField a, const ScalarField& b);

/// Piecewise-constant vector data, one Vec2 per triangle.
class VectorField {
public:
    VectorField(Grid grid, Vec2 fill = {});
    VectorField(Grid grid, std::vector<Vec2> values);

    /// Sample f(x, y) at every triangle centroid.
    static VectorField sample(const Grid& grid, const std::function<Vec2(double, double)>& f);

    const Grid& grid() const { return grid_; }
    int size() const { return static_cast<int>(values_.size()); }
    const Vec2& operator[](int t) const { return values_[t]; }
    Vec2& operator[](int t) { return values_[t]; }
    const std::vector<Vec2>& values() const { return values_; }

    /// Per-triangle |F|.
    std::vector<double> magnitudes() const;
    double max_magnitude() const;

    VectorField& operator+=(const VectorField& o);
    VectorField& operator-=(const VectorField& o);
    VectorField& operator*=(double s);

private:
    Grid grid_;
    std::vector<Vec2> values_;
};

VectorField operator-(VectorField a, const VectorField& b);
VectorField operator+(VectorField a, const VectorField& b);
VectorField operator*(VectorField a, double s);

void require_same_grid(const Grid& a, const Grid& b, const char* what);

} // namespace rpl
