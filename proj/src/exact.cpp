#include "kgd/exact.hpp"

#include <cmath>

#include "kgd/bessel.hpp"
#include "kgd/error.hpp"

namespace kgd {

namespace {

void check_point(double x, double t) {
    if (!(x >= 0.0) || !(t > 0.0) || !std::isfinite(x) || !std::isfinite(t)) {
        throw Error(ErrorCode::InvalidArgument, "exact response needs x >= 0 and t > 0");
    }
}

// sqrt(t^2 - (x/c)^2) factored to keep accuracy near the front.
double proper_time(const MediumParams& m, double x, double t) {
    const double front = x / m.c();
    return std::sqrt((t - front) * (t + front));
}

}  // namespace

ExactResponse exact_r_delta(const MediumParams& m, double x, double t) {
    check_point(x, t);
    ExactResponse r;
    r.wavefront_coeff = std::exp(-0.5 * m.a() * x / m.c());
    r.inside_cone = t >= x / m.c();
    if (!r.inside_cone || m.regime() == Regime::ZeroDelta || x == 0.0) return r;

    const double w = m.branch_radius() * proper_time(m, x, t);
    double ratio;      // Z1(w)/w
    double log_gain;   // exponent folded in from the scaled I1
    if (m.regime() == Regime::PositiveDelta) {
        ratio = w == 0.0 ? 0.5 : bessel_j1(w) / w;
        log_gain = 0.0;
    } else {
        ratio = w == 0.0 ? 0.5 : bessel_i1_scaled(w) / w;
        log_gain = w;
    }
    r.smooth_part = -(x / m.c()) * m.delta() * std::exp(-0.5 * m.a() * t + log_gain) * ratio;
    return r;
}

ExactResponse exact_r_n(const MediumParams& m, double x, double t) {
    check_point(x, t);
    ExactResponse r;
    r.inside_cone = t >= x / m.c();
    if (!r.inside_cone) return r;

    const double w = m.branch_radius() * proper_time(m, x, t);
    switch (m.regime()) {
        case Regime::ZeroDelta:
            r.smooth_part = std::exp(-0.5 * m.a() * t);
            break;
        case Regime::PositiveDelta:
            r.smooth_part = std::exp(-0.5 * m.a() * t) * bessel_j0(w);
            break;
        case Regime::NegativeDelta:
            r.smooth_part = std::exp(-0.5 * m.a() * t + w) * bessel_i0_scaled(w);
            break;
    }
    return r;
}

}  // namespace kgd
