#pragma once

#include <string>

#include "swdv/field.hpp"
#include "swdv/norms.hpp"

namespace swdv {

/// Viscous-model variants. FullQ is the general momentum operator; the named
/// shallow-water models pin its coefficients:
///   Gent          -> (alpha, beta, gamma) = (1/2, 0, 2)
///   MarcheBN      -> (1, 2, 2)
///   SaintVenant   -> gamma = 2, momentum coefficients (1, 0), Q(u) = grad u
///   LaplacianOnly -> gamma = 2, momentum coefficients (1, -1), Q = 0
enum class Variant { FullQ, Gent, MarcheBN, SaintVenant, LaplacianOnly };

std::string variant_name(Variant v);
Variant parse_variant(const std::string& name);

struct ModelSpec {
    double gamma = 2.0;
    double A = 1.0;
    double alpha = 1.0;
    double beta = 0.0;
    Variant variant = Variant::FullQ;

    /// theta = A*gamma/(gamma - 1), the pressure-gradient coefficient of the
    /// reformulated momentum equation.
    double theta() const;

    /// LaplacianOnly drops the gradient-over-density field entirely.
    bool carries_psi() const { return variant != Variant::LaplacianOnly; }

    /// Throws std::invalid_argument naming the offending field and rule.
    void validate() const;
};

/// Builds a validated spec; for the pinned variants, coefficients passed as
/// NaN default to the variant's values, and explicit values must match them.
ModelSpec make_model(Variant variant, double gamma, double A, double alpha, double beta);

struct RegularizationParams {
    double delta = 0.0;   // vacuum lift added to phi0
    double eps_vac = 0.0; // floor used in any division by phi

    void validate() const;
};

/// Fields of the reformulated system on one grid plus the simulation clock.
struct State {
    ScalarField phi;
    VectorField psi;
    VectorField u;
    double t = 0.0;

    const Grid2D& grid() const { return phi.grid(); }
};

/// sup |d(psi_y)/dx - d(psi_x)/dy|, the gradient-symmetry defect.
double curl_defect(const VectorField& psi);

enum class Convert { RhoToPhi, PhiToRho, RhoToPressure };

/// Pointwise power laws phi = rho^((gamma-1)/2), rho = phi^(2/(gamma-1)),
/// P = A rho^gamma. Negative inputs are rejected; magnitudes below 1e-14 are
/// clamped to zero before powers.
ScalarField convert(const ScalarField& f, Convert direction, const ModelSpec& spec);

/// psi = (2/(gamma-1)) grad(phi) / max(phi, eps_vac).
VectorField psi_from_phi(const ScalarField& phi, const ModelSpec& spec,
                         const RegularizationParams& reg);

/// L u = -alpha*lap(u) - (alpha+beta)*grad(div u).
VectorField lame_apply(const VectorField& u, const ModelSpec& spec);
VectorField lame_apply(const VectorField& u, double alpha, double beta);

/// The stress-shape matrix of the variant:
///   FullQ/Gent/MarcheBN: alpha*(J + J^T) + beta*tr(J)*I, J_ij = d v_j/d x_i
///   SaintVenant:         J
///   LaplacianOnly:       0
TensorField q_tensor(const VectorField& v, const ModelSpec& spec);

/// Row-vector contraction (psi . Q(v))_i = sum_j psi_j Q_ji.
VectorField q_apply(const VectorField& psi, const VectorField& v, const ModelSpec& spec);

/// Mass surrogate integral of rho = phi^(2/(gamma-1)) over the box.
double mass_integral(const ScalarField& phi, const ModelSpec& spec);

} // namespace swdv
