#include "swdv/interp.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "swdv/fft.hpp"

namespace swdv {

BicubicSampler::BicubicSampler(const ScalarField& f) : grid_(f.grid()) {
    inv_h_ = 1.0 / grid_.spacing();

    // Prefilter: the cubic B-spline sampled at integers has DFT response
    // (2 + cos(2*pi*m/n)) / 3 per axis, never below 1/3.
    Spectrum s = fft_forward(f);
    const int n = grid_.n;
    std::vector<double> resp(n);
    for (int m = 0; m < n; ++m)
        resp[m] = (2.0 + std::cos(2.0 * std::numbers::pi * m / n)) / 3.0;
    for (int my = 0; my < n; ++my)
        for (int mx = 0; mx < n; ++mx) s.mode(mx, my) /= resp[mx] * resp[my];

    coeff_ = fft_inverse(s).values();
}

BicubicSampler BicubicSampler::blend(const BicubicSampler& a, const BicubicSampler& b, double w) {
    if (!(a.grid_ == b.grid_)) throw std::invalid_argument("BicubicSampler::blend: grid mismatch");
    BicubicSampler out;
    out.grid_ = a.grid_;
    out.inv_h_ = a.inv_h_;
    out.coeff_.resize(a.coeff_.size());
    const double wa = 1.0 - w;
    for (std::size_t i = 0; i < out.coeff_.size(); ++i)
        out.coeff_[i] = wa * a.coeff_[i] + w * b.coeff_[i];
    return out;
}

} // namespace swdv
