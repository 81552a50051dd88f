#pragma once

#include "vscpt/constants.hpp"

namespace vscpt {

/// Faddeeva function w(z) = exp(-z^2) erfc(-i z), valid in the whole plane.
/// Power series near the origin, Gautschi's continued fraction (with
/// Taylor acceleration inside the ellipse (x/6.3)^2 + (y/4.4)^2 < 1)
/// elsewhere; relative accuracy ~1e-13 in the upper half plane.
/// Throws SolverError where exp(-z^2) overflows in the lower half plane.
cplx faddeeva_w(cplx z);

/// Scaled complementary error function erfcx(z) = exp(z^2) erfc(z) = w(iz).
cplx erfcx(cplx z);

/// Error function of complex argument.
cplx erf(cplx z);

/// exp(log_scale) * exp(eta^2) * (1 + erf(eta)), evaluated without
/// overflow when exp(eta^2) alone would overflow but the product is finite.
cplx scaled_erf_plus_one(cplx eta, cplx log_scale);

}  // namespace vscpt
