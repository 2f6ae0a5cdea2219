#pragma once

#include "kgd/medium.hpp"

namespace kgd {

/// Closed-form response at one (x, t): a smooth part inside the light cone
/// plus, for the impulse response, a delta(t - x/c) term at the wavefront.
struct ExactResponse {
    double smooth_part = 0.0;
    double wavefront_coeff = 0.0;
    bool inside_cone = false;
};

/// Impulse response r_delta. Inside the cone (t >= x/c)
///   smooth = -(x/c) delta exp(-a t/2) Z1(w)/w,   w = sqrt(|delta| (t^2 - x^2/c^2)),
/// with Z1 = J1 for delta > 0 and I1 for delta < 0; the wavefront coefficient
/// is exp(-a x / 2c) in every regime.
ExactResponse exact_r_delta(const MediumParams& m, double x, double t);

/// Second response r_n = exp(-a t/2) Z0(w) inside the cone (J0 or I0), with
/// no wavefront term. This is the inverse of exp(-(x/c) W)/W, W = sqrt((s+a/2)^2 + delta).
ExactResponse exact_r_n(const MediumParams& m, double x, double t);

}  // namespace kgd
