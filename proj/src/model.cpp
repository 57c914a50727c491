#include "swdv/model.hpp"

#include <cmath>
#include <stdexcept>

#include "swdv/spectral.hpp"

namespace swdv {

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::FullQ: return "full-q";
        case Variant::Gent: return "gent";
        case Variant::MarcheBN: return "marche-bn";
        case Variant::SaintVenant: return "saint-venant";
        case Variant::LaplacianOnly: return "laplacian-only";
    }
    throw std::logic_error("variant_name: unreachable");
}

Variant parse_variant(const std::string& name) {
    if (name == "full-q") return Variant::FullQ;
    if (name == "gent") return Variant::Gent;
    if (name == "marche-bn") return Variant::MarcheBN;
    if (name == "saint-venant") return Variant::SaintVenant;
    if (name == "laplacian-only") return Variant::LaplacianOnly;
    throw std::invalid_argument(
        "variant: unknown name '" + name +
        "' (expected full-q, gent, marche-bn, saint-venant, laplacian-only)");
}

double ModelSpec::theta() const {
    if (!(gamma > 1.0)) throw std::invalid_argument("theta: gamma must exceed 1");
    return A * gamma / (gamma - 1.0);
}

namespace {

struct Pinned {
    bool has_coeffs = false;
    double alpha = 0.0, beta = 0.0;
    bool has_gamma = false;
    double gamma = 0.0;
};

Pinned pinned_values(Variant v) {
    switch (v) {
        case Variant::FullQ: return {};
        case Variant::Gent: return {true, 0.5, 0.0, true, 2.0};
        case Variant::MarcheBN: return {true, 1.0, 2.0, true, 2.0};
        case Variant::SaintVenant: return {true, 1.0, 0.0, true, 2.0};
        case Variant::LaplacianOnly: return {true, 1.0, -1.0, true, 2.0};
    }
    throw std::logic_error("pinned_values: unreachable");
}

} // namespace

void ModelSpec::validate() const {
    if (!(gamma > 1.0))
        throw std::invalid_argument("model.gamma: adiabatic exponent must exceed 1");
    if (!(A > 0.0)) throw std::invalid_argument("model.A: pressure constant must be positive");

    const Pinned pin = pinned_values(variant);
    if (pin.has_gamma && gamma != pin.gamma)
        throw std::invalid_argument("model.gamma: variant " + variant_name(variant) +
                                    " requires gamma = " + std::to_string(pin.gamma));
    if (pin.has_coeffs && (alpha != pin.alpha || beta != pin.beta))
        throw std::invalid_argument("model.alpha/beta: variant " + variant_name(variant) +
                                    " pins (alpha, beta) = (" + std::to_string(pin.alpha) + ", " +
                                    std::to_string(pin.beta) + ")");

    if (!(alpha > 0.0 && alpha + beta >= 0.0))
        throw std::invalid_argument(
            "model.alpha/beta: viscosity coefficients must satisfy alpha > 0 and "
            "alpha + beta >= 0");
}

ModelSpec make_model(Variant variant, double gamma, double A, double alpha, double beta) {
    const Pinned pin = pinned_values(variant);
    ModelSpec spec;
    spec.variant = variant;
    spec.A = A;
    spec.gamma = std::isnan(gamma) && pin.has_gamma ? pin.gamma : gamma;
    spec.alpha = std::isnan(alpha) && pin.has_coeffs ? pin.alpha : alpha;
    spec.beta = std::isnan(beta) && pin.has_coeffs ? pin.beta : beta;
    spec.validate();
    return spec;
}

void RegularizationParams::validate() const {
    if (!(delta >= 0.0)) throw std::invalid_argument("regularization.delta: must be >= 0");
    if (!(eps_vac > 0.0)) throw std::invalid_argument("regularization.eps_vac: must be > 0");
}

double curl_defect(const VectorField& psi) {
    return norm(vorticity(psi), NormSpec::sup());
}

namespace {

ScalarField pointwise_power(const ScalarField& f, double exponent, const char* what) {
    ScalarField out(f.grid());
    for (std::size_t i = 0; i < f.size(); ++i) {
        double v = f[i];
        if (std::fabs(v) < 1e-14) v = 0.0; // float noise at vacuum
        if (v < 0.0)
            throw std::invalid_argument(std::string(what) + ": negative input sample " +
                                        std::to_string(v));
        out[i] = std::pow(v, exponent);
    }
    return out;
}

} // namespace

ScalarField convert(const ScalarField& f, Convert direction, const ModelSpec& spec) {
    switch (direction) {
        case Convert::RhoToPhi:
            return pointwise_power(f, 0.5 * (spec.gamma - 1.0), "convert(rho->phi)");
        case Convert::PhiToRho:
            return pointwise_power(f, 2.0 / (spec.gamma - 1.0), "convert(phi->rho)");
        case Convert::RhoToPressure: {
            ScalarField p = pointwise_power(f, spec.gamma, "convert(rho->pressure)");
            return spec.A * p;
        }
    }
    throw std::logic_error("convert: unreachable");
}

VectorField psi_from_phi(const ScalarField& phi, const ModelSpec& spec,
                         const RegularizationParams& reg) {
    reg.validate();
    VectorField g = gradient(phi);
    const double scale = 2.0 / (spec.gamma - 1.0);
    VectorField out(phi.grid());
    for (std::size_t i = 0; i < phi.size(); ++i) {
        const double denom = std::max(phi[i], reg.eps_vac);
        out.x()[i] = scale * g.x()[i] / denom;
        out.y()[i] = scale * g.y()[i] / denom;
    }
    return out;
}

VectorField lame_apply(const VectorField& u, double alpha, double beta) {
    VectorField lap = laplacian(u);
    VectorField gd = grad_div(u);
    VectorField out(u.grid());
    for (int c = 0; c < 2; ++c)
        for (std::size_t i = 0; i < out.comp(c).size(); ++i)
            out.comp(c)[i] = -alpha * lap.comp(c)[i] - (alpha + beta) * gd.comp(c)[i];
    return out;
}

VectorField lame_apply(const VectorField& u, const ModelSpec& spec) {
    return lame_apply(u, spec.alpha, spec.beta);
}

TensorField q_tensor(const VectorField& v, const ModelSpec& spec) {
    if (spec.variant == Variant::LaplacianOnly) return TensorField(v.grid());

    TensorField j = jacobian(v);
    if (spec.variant == Variant::SaintVenant) return j;

    TensorField q(v.grid());
    for (std::size_t i = 0; i < v.x().size(); ++i) {
        const double j00 = j.entry(0, 0)[i], j01 = j.entry(0, 1)[i];
        const double j10 = j.entry(1, 0)[i], j11 = j.entry(1, 1)[i];
        const double div = j00 + j11;
        q.entry(0, 0)[i] = 2.0 * spec.alpha * j00 + spec.beta * div;
        q.entry(1, 1)[i] = 2.0 * spec.alpha * j11 + spec.beta * div;
        q.entry(0, 1)[i] = spec.alpha * (j01 + j10);
        q.entry(1, 0)[i] = spec.alpha * (j01 + j10);
    }
    return q;
}

VectorField q_apply(const VectorField& psi, const VectorField& v, const ModelSpec& spec) {
    check_same_grid(psi.grid(), v.grid());
    TensorField q = q_tensor(v, spec);
    VectorField out(v.grid());
    for (std::size_t i = 0; i < out.x().size(); ++i) {
        const double px = psi.x()[i], py = psi.y()[i];
        out.x()[i] = px * q.entry(0, 0)[i] + py * q.entry(1, 0)[i];
        out.y()[i] = px * q.entry(0, 1)[i] + py * q.entry(1, 1)[i];
    }
    return out;
}

double mass_integral(const ScalarField& phi, const ModelSpec& spec) {
    ScalarField rho = convert(phi, Convert::PhiToRho, spec);
    std::vector<double> rows(rho.grid().n, 0.0);
    for (int iy = 0; iy < rho.grid().n; ++iy) {
        double acc = 0.0;
        for (int ix = 0; ix < rho.grid().n; ++ix) acc += rho.at(ix, iy);
        rows[iy] = acc;
    }
    double total = 0.0;
    for (double r : rows) total += r;
    return total * rho.grid().cell_area();
}

} // namespace swdv
