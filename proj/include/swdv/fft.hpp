#pragma once

#include <complex>
#include <vector>

#include "swdv/field.hpp"
#include "swdv/grid.hpp"

namespace swdv {

/// Fourier coefficients c_m of a real field, full n x n complex layout,
/// row-major with mode (mx, my) at index my*n + mx. Coefficients are
/// normalized so that f(x) = sum_m c_m exp(i k_m . x) with
/// k_m = 2*pi*signed(m)/box_length.
class Spectrum {
  public:
    Spectrum() = default;
    explicit Spectrum(const Grid2D& grid) : grid_(grid), coeff_(grid.size()) {}

    const Grid2D& grid() const { return grid_; }
    std::size_t size() const { return coeff_.size(); }
    std::complex<double>* data() { return coeff_.data(); }
    const std::complex<double>* data() const { return coeff_.data(); }

    std::complex<double>& mode(int mx, int my) {
        return coeff_[static_cast<std::size_t>(my) * grid_.n + mx];
    }
    const std::complex<double>& mode(int mx, int my) const {
        return coeff_[static_cast<std::size_t>(my) * grid_.n + mx];
    }

  private:
    Grid2D grid_;
    std::vector<std::complex<double>> coeff_;
};

/// Signed integer frequency for DFT index m on an n-point axis: result in
/// [-n/2, n/2), with the Nyquist index n/2 mapped to -n/2.
inline int signed_mode(int m, int n) { return m <= n / 2 - 1 ? m : m - n; }

/// Physical wavenumber 2*pi*signed(m)/L.
double wavenumber(int m, int n, double box_length);

Spectrum fft_forward(const ScalarField& f);
ScalarField fft_inverse(const Spectrum& s);

} // namespace swdv
