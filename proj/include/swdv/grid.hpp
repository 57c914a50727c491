#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swdv {

/// Uniform periodic grid on the torus [0, box_length)^2, n nodes per axis.
struct Grid2D {
    int n = 0;
    double box_length = 0.0;

    Grid2D() = default;
    Grid2D(int n_, double box_length_) : n(n_), box_length(box_length_) {
        if (n < 8 || (n & (n - 1)) != 0)
            throw std::invalid_argument("Grid2D: n must be a power of two >= 8, got " +
                                        std::to_string(n));
        if (!(box_length > 0.0))
            throw std::invalid_argument("Grid2D: box_length must be positive");
    }

    double spacing() const { return box_length / n; }
    double cell_area() const { return spacing() * spacing(); }
    std::size_t size() const { return static_cast<std::size_t>(n) * n; }

    // Node coordinates, row-major: index = iy*n + ix.
    double x(int ix) const { return spacing() * ix; }
    double y(int iy) const { return spacing() * iy; }

    // Coordinate relative to the box center, in [-L/2, L/2).
    double xc(int ix) const { return x(ix) - 0.5 * box_length; }
    double yc(int iy) const { return y(iy) - 0.5 * box_length; }

    bool operator==(const Grid2D&) const = default;
};

} // namespace swdv
