#pragma once

#include "swdv/fft.hpp"
#include "swdv/field.hpp"

namespace swdv {

/// Maximum mixed-partial order supported by the spectral kernels.
inline constexpr int kMaxDerivativeOrder = 4;

/// Spectral mixed partial d^(ox+oy) f / dx^ox dy^oy, ox + oy <= 4.
/// Exact for band-limited inputs; the Nyquist line is zeroed along any axis
/// with odd derivative order.
ScalarField partial(const ScalarField& f, int ox, int oy);
ScalarField partial(const Spectrum& s, int ox, int oy);

VectorField gradient(const ScalarField& f);
ScalarField divergence(const VectorField& v);
ScalarField laplacian(const ScalarField& f);
VectorField laplacian(const VectorField& v);

/// Jacobian with entry(i, j) = d v_j / d x_i.
TensorField jacobian(const VectorField& v);

/// grad(div v), the coupling term of the momentum operator.
VectorField grad_div(const VectorField& v);

/// D(v) = (J + J^T)/2 with J the Jacobian; symmetry exact by construction.
TensorField sym_gradient(const VectorField& v);

/// omega = d(v_y)/dx - d(v_x)/dy.
ScalarField vorticity(const VectorField& v);

/// 2/3-rule truncation: zero every mode with |signed mx| or |signed my|
/// above n/3. Applied after pointwise products of spectrally represented
/// fields.
void dealias(Spectrum& s);
ScalarField dealias(const ScalarField& f);
VectorField dealias(const VectorField& v);

/// Mean value (the k = 0 Fourier coefficient).
double mean(const ScalarField& f);

/// Throws std::invalid_argument naming `what` if the field has NaN/Inf nodes.
void require_finite(const ScalarField& f, const char* what);
void require_finite(const VectorField& v, const char* what);

} // namespace swdv
