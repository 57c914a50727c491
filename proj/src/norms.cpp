#include "swdv/norms.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace swdv {

NormSpec NormSpec::lebesgue(double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("NormSpec: lebesgue exponent must be >= 1");
    return {Kind::Lebesgue, p, 0};
}

NormSpec NormSpec::seminorm(int k, double r) {
    if (!(r >= 1.0)) throw std::invalid_argument("NormSpec: seminorm exponent must be >= 1");
    if (k < 0 || k > kMaxDerivativeOrder)
        throw std::invalid_argument("NormSpec: seminorm order must be in [0, 4]");
    return {Kind::Seminorm, r, k};
}

NormSpec NormSpec::sobolev(int s) {
    if (s < 0 || s > kMaxDerivativeOrder)
        throw std::invalid_argument("NormSpec: sobolev order must be in [0, 4]");
    return {Kind::Sobolev, 2.0, s};
}

namespace {

double binomial(int n, int k) {
    double out = 1.0;
    for (int j = 1; j <= k; ++j) out = out * (n - k + j) / j;
    return out;
}

// Accumulate squared order-k derivative magnitude of one scalar field.
void accumulate_derivative_sq(const ScalarField& f, int k, ScalarField& sq) {
    Spectrum s = fft_forward(f);
    for (int ox = 0; ox <= k; ++ox) {
        const int oy = k - ox;
        ScalarField d = partial(s, ox, oy);
        const double w = binomial(k, ox);
        for (std::size_t i = 0; i < sq.size(); ++i) sq[i] += w * d[i] * d[i];
    }
}

ScalarField sqrt_field(ScalarField f) {
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = std::sqrt(f[i]);
    return f;
}

} // namespace

ScalarField derivative_magnitude(const ScalarField& f, int k) {
    if (k == 0) {
        ScalarField out = f;
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::fabs(out[i]);
        return out;
    }
    ScalarField sq(f.grid(), 0.0);
    accumulate_derivative_sq(f, k, sq);
    return sqrt_field(std::move(sq));
}

ScalarField derivative_magnitude(const VectorField& f, int k) {
    ScalarField sq(f.grid(), 0.0);
    if (k == 0) {
        for (std::size_t i = 0; i < sq.size(); ++i)
            sq[i] = f.x()[i] * f.x()[i] + f.y()[i] * f.y()[i];
    } else {
        accumulate_derivative_sq(f.x(), k, sq);
        accumulate_derivative_sq(f.y(), k, sq);
    }
    return sqrt_field(std::move(sq));
}

double magnitude_lp(const ScalarField& mag, double p) {
    const Grid2D& grid = mag.grid();
    const int n = grid.n;
    if (p == kInfExponent) {
        double m = 0.0;
        for (std::size_t i = 0; i < mag.size(); ++i) m = std::max(m, std::fabs(mag[i]));
        return m;
    }
    // Row partials combined in index order: deterministic for any thread count.
    std::vector<double> rows(n, 0.0);
    for (int iy = 0; iy < n; ++iy) {
        double acc = 0.0;
        for (int ix = 0; ix < n; ++ix) acc += std::pow(std::fabs(mag.at(ix, iy)), p);
        rows[iy] = acc;
    }
    double total = 0.0;
    for (double r : rows) total += r;
    return std::pow(total * grid.cell_area(), 1.0 / p);
}

namespace {

template <class FieldT>
double norm_impl(const FieldT& f, const NormSpec& spec) {
    switch (spec.kind) {
        case NormSpec::Kind::Sup:
            return magnitude_lp(derivative_magnitude(f, 0), kInfExponent);
        case NormSpec::Kind::Lebesgue:
            return magnitude_lp(derivative_magnitude(f, 0), spec.p);
        case NormSpec::Kind::Seminorm:
            return magnitude_lp(derivative_magnitude(f, spec.order), spec.p);
        case NormSpec::Kind::Sobolev: {
            double sq = 0.0;
            for (int k = 0; k <= spec.order; ++k) {
                const double v = magnitude_lp(derivative_magnitude(f, k), 2.0);
                sq += v * v;
            }
            return std::sqrt(sq);
        }
    }
    throw std::logic_error("norm: unreachable");
}

} // namespace

double norm(const ScalarField& f, const NormSpec& spec) { return norm_impl(f, spec); }
double norm(const VectorField& f, const NormSpec& spec) { return norm_impl(f, spec); }

double mixed_l6_d1_d2(const ScalarField& f) {
    return norm(f, NormSpec::lebesgue(6.0)) + norm(f, NormSpec::seminorm(1, 2.0)) +
           norm(f, NormSpec::seminorm(2, 2.0));
}

double mixed_l6_d1_d2(const VectorField& f) {
    return norm(f, NormSpec::lebesgue(6.0)) + norm(f, NormSpec::seminorm(1, 2.0)) +
           norm(f, NormSpec::seminorm(2, 2.0));
}

double mixed_l6_d1(const ScalarField& f) {
    return norm(f, NormSpec::lebesgue(6.0)) + norm(f, NormSpec::seminorm(1, 2.0));
}

double mixed_l6_d1(const VectorField& f) {
    return norm(f, NormSpec::lebesgue(6.0)) + norm(f, NormSpec::seminorm(1, 2.0));
}

ScalarField pointwise_opnorm(const TensorField& t) {
    ScalarField out(t.grid());
    const ScalarField& a = t.entry(0, 0);
    const ScalarField& b = t.entry(0, 1);
    const ScalarField& c = t.entry(1, 0);
    const ScalarField& d = t.entry(1, 1);
    for (std::size_t i = 0; i < out.size(); ++i) {
        // Largest singular value of [[a,b],[c,d]] via the Frobenius/determinant
        // identity: s_max^2 = (F + sqrt(F^2 - 4 det^2)) / 2, F = a^2+b^2+c^2+d^2.
        const double fr = a[i] * a[i] + b[i] * b[i] + c[i] * c[i] + d[i] * d[i];
        const double det = a[i] * d[i] - b[i] * c[i];
        const double disc = std::max(0.0, fr * fr - 4.0 * det * det);
        out[i] = std::sqrt(0.5 * (fr + std::sqrt(disc)));
    }
    return out;
}

} // namespace swdv
