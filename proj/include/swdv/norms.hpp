#pragma once

#include <limits>

#include "swdv/field.hpp"
#include "swdv/spectral.hpp"

namespace swdv {

inline constexpr double kInfExponent = std::numeric_limits<double>::infinity();

/// Norm request: Lebesgue L^p, homogeneous seminorm |grad^k f|_{L^r}
/// (Frobenius magnitude of the full order-k derivative tensor), inhomogeneous
/// Sobolev H^s, or grid sup.
struct NormSpec {
    enum class Kind { Lebesgue, Seminorm, Sobolev, Sup };

    Kind kind = Kind::Lebesgue;
    double p = 2.0; // Lebesgue/seminorm integrability exponent, in [1, inf]
    int order = 0;  // derivative order k (seminorm) or s (sobolev)

    static NormSpec lebesgue(double p);
    static NormSpec seminorm(int k, double r);
    static NormSpec sobolev(int s);
    static NormSpec sup() { return {Kind::Sup, kInfExponent, 0}; }
};

double norm(const ScalarField& f, const NormSpec& spec);
double norm(const VectorField& f, const NormSpec& spec);

/// |f|_{L^6 cap D^1 cap D^2} realized as the sum of the three norms.
double mixed_l6_d1_d2(const ScalarField& f);
double mixed_l6_d1_d2(const VectorField& f);

/// |f|_{L^6 cap D^1} as the sum of the two norms.
double mixed_l6_d1(const ScalarField& f);
double mixed_l6_d1(const VectorField& f);

/// Pointwise magnitude of the order-k derivative tensor (multinomial-weighted
/// Frobenius); k = 0 gives |f|.
ScalarField derivative_magnitude(const ScalarField& f, int k);
ScalarField derivative_magnitude(const VectorField& f, int k);

/// Pointwise operator (spectral) norm of a 2x2 tensor field: largest singular
/// value, closed form per node.
ScalarField pointwise_opnorm(const TensorField& t);

/// L^p integral norm of a nonnegative magnitude field (p finite) or its sup.
double magnitude_lp(const ScalarField& mag, double p);

} // namespace swdv
