#pragma once

#include <memory>
#include <vector>

#include "swdv/field.hpp"

namespace swdv {

/// Periodic cubic B-spline interpolation of a grid field. Coefficients come
/// from a spectral prefilter (division by the sampled B-spline response), so
/// the interpolant matches node values exactly and has 4th-order interior
/// accuracy on smooth fields.
class BicubicSampler {
  public:
    BicubicSampler() = default;
    explicit BicubicSampler(const ScalarField& f);

    /// Convex combination of two samplers on the same grid: coefficients
    /// (1-w)*a + w*b. Used for linear-in-time blending of stored snapshots.
    static BicubicSampler blend(const BicubicSampler& a, const BicubicSampler& b, double w);

    const Grid2D& grid() const { return grid_; }

    /// Evaluate at physical (x, y); periodic wrap for any real input.
    double operator()(double x, double y) const {
        // Grid units; n is a power of two so wrapping is a bitmask.
        const int n = grid_.n;
        const int mask = n - 1;
        double gx = x * inv_h_;
        double gy = y * inv_h_;
        const double fx = std::floor(gx);
        const double fy = std::floor(gy);
        const double tx = gx - fx;
        const double ty = gy - fy;
        const int ix = static_cast<int>(fx);
        const int iy = static_cast<int>(fy);

        double wx[4], wy[4];
        weights(tx, wx);
        weights(ty, wy);

        double acc = 0.0;
        for (int j = 0; j < 4; ++j) {
            const int row = (iy - 1 + j) & mask;
            const double* base = coeff_.data() + static_cast<std::size_t>(row) * n;
            double line = 0.0;
            for (int i = 0; i < 4; ++i) line += wx[i] * base[(ix - 1 + i) & mask];
            acc += wy[j] * line;
        }
        return acc;
    }

  private:
    static void weights(double t, double w[4]) {
        const double t2 = t * t;
        const double t3 = t2 * t;
        w[0] = (1.0 - 3.0 * t + 3.0 * t2 - t3) / 6.0;
        w[1] = (4.0 - 6.0 * t2 + 3.0 * t3) / 6.0;
        w[2] = (1.0 + 3.0 * t + 3.0 * t2 - 3.0 * t3) / 6.0;
        w[3] = t3 / 6.0;
    }

    Grid2D grid_;
    double inv_h_ = 0.0;
    std::vector<double> coeff_;
};

} // namespace swdv
