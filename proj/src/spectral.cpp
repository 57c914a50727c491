#include "swdv/spectral.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace swdv {

namespace {

using cd = std::complex<double>;

// (i*k)^order along one axis; zero at the Nyquist index for odd orders.
cd axis_multiplier(int m, int n, double box_length, int order) {
    if (order == 0) return {1.0, 0.0};
    if (m == n / 2 && (order % 2) != 0) return {0.0, 0.0};
    const double k = wavenumber(m, n, box_length);
    cd ik(0.0, k);
    cd out(1.0, 0.0);
    for (int j = 0; j < order; ++j) out *= ik;
    return out;
}

void apply_partial_multiplier(Spectrum& s, int ox, int oy) {
    const Grid2D& grid = s.grid();
    const int n = grid.n;
    std::vector<cd> mx(n), my(n);
    for (int m = 0; m < n; ++m) {
        mx[m] = axis_multiplier(m, n, grid.box_length, ox);
        my[m] = axis_multiplier(m, n, grid.box_length, oy);
    }
    for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix) s.mode(ix, iy) *= mx[ix] * my[iy];
}

} // namespace

ScalarField partial(const Spectrum& s, int ox, int oy) {
    if (ox < 0 || oy < 0 || ox + oy > kMaxDerivativeOrder)
        throw std::invalid_argument("partial: order must satisfy 0 <= ox+oy <= 4, got (" +
                                    std::to_string(ox) + "," + std::to_string(oy) + ")");
    Spectrum d = s;
    apply_partial_multiplier(d, ox, oy);
    return fft_inverse(d);
}

ScalarField partial(const ScalarField& f, int ox, int oy) {
    require_finite(f, "partial");
    return partial(fft_forward(f), ox, oy);
}

VectorField gradient(const ScalarField& f) {
    require_finite(f, "gradient");
    Spectrum s = fft_forward(f);
    return {partial(s, 1, 0), partial(s, 0, 1)};
}

ScalarField divergence(const VectorField& v) {
    require_finite(v, "divergence");
    ScalarField dx = partial(v.x(), 1, 0);
    ScalarField dy = partial(v.y(), 0, 1);
    return dx + dy;
}

ScalarField laplacian(const ScalarField& f) {
    require_finite(f, "laplacian");
    Spectrum s = fft_forward(f);
    ScalarField fxx = partial(s, 2, 0);
    ScalarField fyy = partial(s, 0, 2);
    return fxx + fyy;
}

VectorField laplacian(const VectorField& v) { return {laplacian(v.x()), laplacian(v.y())}; }

TensorField jacobian(const VectorField& v) {
    require_finite(v, "jacobian");
    TensorField out(v.grid());
    for (int j = 0; j < 2; ++j) {
        Spectrum s = fft_forward(v.comp(j));
        out.entry(0, j) = partial(s, 1, 0);
        out.entry(1, j) = partial(s, 0, 1);
    }
    return out;
}

VectorField grad_div(const VectorField& v) {
    ScalarField div = divergence(v);
    return gradient(div);
}

TensorField sym_gradient(const VectorField& v) {
    TensorField j = jacobian(v);
    TensorField out(v.grid());
    out.entry(0, 0) = j.entry(0, 0);
    out.entry(1, 1) = j.entry(1, 1);
    ScalarField off = 0.5 * (j.entry(0, 1) + j.entry(1, 0));
    out.entry(0, 1) = off;
    out.entry(1, 0) = off;
    return out;
}

ScalarField vorticity(const VectorField& v) {
    require_finite(v, "vorticity");
    ScalarField a = partial(v.y(), 1, 0);
    ScalarField b = partial(v.x(), 0, 1);
    return a - b;
}

void dealias(Spectrum& s) {
    const int n = s.grid().n;
    const int cutoff = n / 3;
    for (int iy = 0; iy < n; ++iy) {
        const bool cut_y = std::abs(signed_mode(iy, n)) > cutoff;
        for (int ix = 0; ix < n; ++ix) {
            if (cut_y || std::abs(signed_mode(ix, n)) > cutoff) s.mode(ix, iy) = 0.0;
        }
    }
}

ScalarField dealias(const ScalarField& f) {
    Spectrum s = fft_forward(f);
    dealias(s);
    return fft_inverse(s);
}

VectorField dealias(const VectorField& v) { return {dealias(v.x()), dealias(v.y())}; }

double mean(const ScalarField& f) {
    // Row partials combined in index order: deterministic for any thread count.
    const int n = f.grid().n;
    std::vector<double> rows(n, 0.0);
    for (int iy = 0; iy < n; ++iy) {
        double acc = 0.0;
        for (int ix = 0; ix < n; ++ix) acc += f.at(ix, iy);
        rows[iy] = acc;
    }
    double total = 0.0;
    for (double r : rows) total += r;
    return total / static_cast<double>(f.size());
}

void require_finite(const ScalarField& f, const char* what) {
    if (!f.finite())
        throw std::invalid_argument(std::string(what) + ": input field has non-finite nodes");
}

void require_finite(const VectorField& v, const char* what) {
    require_finite(v.x(), what);
    require_finite(v.y(), what);
}

} // namespace swdv
