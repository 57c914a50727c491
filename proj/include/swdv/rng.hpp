#pragma once

#include <cstdint>

#include "swdv/fft.hpp"
#include "swdv/field.hpp"

namespace swdv {

/// 64-bit linear congruential generator, x <- a*x + c mod 2^64 with
/// a = 6364136223846793005, c = 1442695040888963407 (documented for
/// cross-implementation determinism). Uniforms take the top 53 bits.
class Lcg64 {
  public:
    explicit Lcg64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    /// Uniform in (0, 1).
    double uniform();

    /// Standard normal via Box-Muller (pairs drawn in a fixed order).
    double gaussian();

  private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Random real field with Gaussian spectral coefficients, |k|^(-decay) decay,
/// zero mean, and all modes with Euclidean integer frequency above `cutoff`
/// empty. Mode iteration order is fixed, so a seed pins the field exactly.
ScalarField random_band_limited(const Grid2D& grid, Lcg64& rng, int cutoff, double decay = 2.0);

/// Same with the module default cutoff n/4.
ScalarField random_band_limited(const Grid2D& grid, Lcg64& rng);

VectorField random_band_limited_vector(const Grid2D& grid, Lcg64& rng, int cutoff,
                                       double decay = 2.0);

} // namespace swdv
