#include "swdv/rng.hpp"

#include <cmath>
#include <numbers>

namespace swdv {

double Lcg64::uniform() {
    const std::uint64_t bits = next() >> 11; // top 53 bits
    double u = static_cast<double>(bits) * 0x1.0p-53;
    if (u <= 0.0) u = 0x1.0p-53;
    return u;
}

double Lcg64::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

ScalarField random_band_limited(const Grid2D& grid, Lcg64& rng, int cutoff, double decay) {
    const int n = grid.n;
    Spectrum s(grid);
    for (int my = 0; my < n; ++my) {
        const int sy = signed_mode(my, n);
        for (int mx = 0; mx < n; ++mx) {
            const int sx = signed_mode(mx, n);
            // Draw each conjugate pair once, from its upper-half representative.
            const bool upper = sy > 0 || (sy == 0 && sx > 0);
            if (!upper) continue;
            const double k2 = static_cast<double>(sx) * sx + static_cast<double>(sy) * sy;
            if (k2 > static_cast<double>(cutoff) * cutoff) continue;
            const double amp = std::pow(k2, -0.5 * decay);
            const std::complex<double> c(amp * rng.gaussian(), amp * rng.gaussian());
            s.mode(mx, my) = c;
            const int cx = (n - mx) % n;
            const int cy = (n - my) % n;
            s.mode(cx, cy) = std::conj(c);
        }
    }
    return fft_inverse(s);
}

ScalarField random_band_limited(const Grid2D& grid, Lcg64& rng) {
    return random_band_limited(grid, rng, grid.n / 4);
}

VectorField random_band_limited_vector(const Grid2D& grid, Lcg64& rng, int cutoff, double decay) {
    ScalarField x = random_band_limited(grid, rng, cutoff, decay);
    ScalarField y = random_band_limited(grid, rng, cutoff, decay);
    return {std::move(x), std::move(y)};
}

} // namespace swdv
