#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "swdv/grid.hpp"

namespace swdv {

/// Real scalar samples at grid nodes, row-major (index = iy*n + ix).
class ScalarField {
  public:
    ScalarField() = default;
    explicit ScalarField(const Grid2D& grid, double fill = 0.0)
        : grid_(grid), values_(grid.size(), fill) {}

    ScalarField(const Grid2D& grid, std::vector<double> values)
        : grid_(grid), values_(std::move(values)) {
        if (values_.size() != grid_.size())
            throw std::invalid_argument("ScalarField: values length must be n^2");
    }

    const Grid2D& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }
    double* data() { return values_.data(); }
    const double* data() const { return values_.data(); }
    std::vector<double>& values() { return values_; }
    const std::vector<double>& values() const { return values_; }

    double operator[](std::size_t i) const { return values_[i]; }
    double& operator[](std::size_t i) { return values_[i]; }
    double at(int ix, int iy) const { return values_[static_cast<std::size_t>(iy) * grid_.n + ix]; }
    double& at(int ix, int iy) { return values_[static_cast<std::size_t>(iy) * grid_.n + ix]; }

    bool finite() const {
        for (double v : values_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    /// Evaluate f(x, y) at every node.
    static ScalarField sample(const Grid2D& grid, const std::function<double(double, double)>& f) {
        ScalarField out(grid);
        for (int iy = 0; iy < grid.n; ++iy)
            for (int ix = 0; ix < grid.n; ++ix)
                out.at(ix, iy) = f(grid.x(ix), grid.y(iy));
        return out;
    }

  private:
    Grid2D grid_;
    std::vector<double> values_;
};

/// Two scalar components on a shared grid.
class VectorField {
  public:
    VectorField() = default;
    explicit VectorField(const Grid2D& grid) : x_(grid), y_(grid) {}
    VectorField(ScalarField x, ScalarField y) : x_(std::move(x)), y_(std::move(y)) {
        if (!(x_.grid() == y_.grid()))
            throw std::invalid_argument("VectorField: components must share a grid");
    }

    const Grid2D& grid() const { return x_.grid(); }
    ScalarField& x() { return x_; }
    const ScalarField& x() const { return x_; }
    ScalarField& y() { return y_; }
    const ScalarField& y() const { return y_; }
    ScalarField& comp(int i) { return i == 0 ? x_ : y_; }
    const ScalarField& comp(int i) const { return i == 0 ? x_ : y_; }

    bool finite() const { return x_.finite() && y_.finite(); }

    static VectorField sample(const Grid2D& grid,
                              const std::function<double(double, double)>& fx,
                              const std::function<double(double, double)>& fy) {
        return {ScalarField::sample(grid, fx), ScalarField::sample(grid, fy)};
    }

  private:
    ScalarField x_, y_;
};

/// General 2x2 tensor field; entry(i, j) holds T_ij.
class TensorField {
  public:
    TensorField() = default;
    explicit TensorField(const Grid2D& grid)
        : comps_{ScalarField(grid), ScalarField(grid), ScalarField(grid), ScalarField(grid)} {}

    const Grid2D& grid() const { return comps_[0].grid(); }
    ScalarField& entry(int i, int j) { return comps_[2 * i + j]; }
    const ScalarField& entry(int i, int j) const { return comps_[2 * i + j]; }

  private:
    ScalarField comps_[4];
};

// Pointwise arithmetic; grids must match.

inline void check_same_grid(const Grid2D& a, const Grid2D& b) {
    if (!(a == b)) throw std::invalid_argument("grid mismatch");
}

inline ScalarField operator+(const ScalarField& a, const ScalarField& b) {
    check_same_grid(a.grid(), b.grid());
    ScalarField out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

inline ScalarField operator-(const ScalarField& a, const ScalarField& b) {
    check_same_grid(a.grid(), b.grid());
    ScalarField out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

inline ScalarField operator*(const ScalarField& a, const ScalarField& b) {
    check_same_grid(a.grid(), b.grid());
    ScalarField out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= b[i];
    return out;
}

inline ScalarField operator*(double s, const ScalarField& a) {
    ScalarField out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= s;
    return out;
}

inline VectorField operator+(const VectorField& a, const VectorField& b) {
    return {a.x() + b.x(), a.y() + b.y()};
}

inline VectorField operator-(const VectorField& a, const VectorField& b) {
    return {a.x() - b.x(), a.y() - b.y()};
}

inline VectorField operator*(double s, const VectorField& a) {
    return {s * a.x(), s * a.y()};
}

inline ScalarField axpy(double s, const ScalarField& a, const ScalarField& b) {
    check_same_grid(a.grid(), b.grid());
    ScalarField out = b;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += s * a[i];
    return out;
}

} // namespace swdv
