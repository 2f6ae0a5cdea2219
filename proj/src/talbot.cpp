#include "kgd/talbot.hpp"

#include <cmath>
#include <numbers>

namespace kgd {

namespace {

constexpr int kMaxTalbotNodes = 4000;

template <class Real>
Real invert_kgd(const MediumParams& m, ResponseKind kind, double x, double t, int nodes) {
    using Cx = ComplexT<Real>;
    const Real a(m.a());
    const Real delta = Real(m.b()) - a * a / 4;
    const Real radius = sqrt(abs(delta));
    const Real travel = Real(x) / Real(m.c());
    const Regime regime = m.regime();

    // Square root on the sheet cut along the segment between the branch
    // points; the Talbot contour encloses that segment.
    auto branch = [&](const Cx& z) -> Cx {
        switch (regime) {
            case Regime::ZeroDelta:
                return z;
            case Regime::NegativeDelta:
                return sqrt(z - radius) * sqrt(z + radius);
            case Regime::PositiveDelta: {
                const Cx v(z.imag(), -z.real());
                return Cx(Real(0), Real(1)) * sqrt(v - radius) * sqrt(v + radius);
            }
        }
        return z;
    };

    auto transform = [&](const Cx& s) -> Cx {
        const Cx z = s + a / 2;
        const Cx w = branch(z);
        if (kind == ResponseKind::N) return exp(-travel * w) / w;
        return exp(-travel * w) - exp(-travel * z);
    };
    return talbot_invert(transform, Real(t), nodes);
}

}  // namespace

int talbot_auto_nodes(const MediumParams& m, double t) {
    if (!(t > 0.0)) throw Error(ErrorCode::InvalidArgument, "Talbot inversion needs t > 0");
    if (m.regime() != Regime::PositiveDelta) return kDefaultTalbotNodes;

    // The contour is x(theta) = r theta cot theta, y = r theta. Find the
    // height at which it passes the abscissa of the branch points.
    const double target_x = -0.5 * m.a();
    const double target_y = 1.15 * m.branch_radius();
    for (int nodes = kDefaultTalbotNodes; nodes <= kMaxTalbotNodes; nodes += 8) {
        const double r = 2.0 * nodes / (5.0 * t);
        double lo = 1e-9;
        double hi = std::numbers::pi - 1e-9;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double xm = r * mid * std::cos(mid) / std::sin(mid);
            (xm > target_x ? lo : hi) = mid;
        }
        // Just clearing the branch points leaves the contour close enough to
        // slow convergence; half again as many nodes restores it.
        if (r * lo >= target_y) return (3 * nodes / 2 + 7) / 8 * 8;
    }
    throw Error(ErrorCode::OutOfRange, "Talbot contour cannot enclose the branch points");
}

int talbot_required_digits(int nodes) {
    return static_cast<int>(std::ceil(0.4 * nodes / std::log(10.0))) + 30;
}

double talbot_response(const MediumParams& m, ResponseKind kind, double x, double t, int nodes) {
    if (!(x >= 0.0) || !(t > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "Talbot response needs x >= 0 and t > 0");
    }
    if (t < x / m.c()) return 0.0;
    if (nodes <= 0) nodes = talbot_auto_nodes(m, t);
    const int digits = talbot_required_digits(nodes);
    if (digits <= 50) return static_cast<double>(invert_kgd<MpReal<50>>(m, kind, x, t, nodes));
    if (digits <= 120) return static_cast<double>(invert_kgd<MpReal<120>>(m, kind, x, t, nodes));
    if (digits <= 250) return static_cast<double>(invert_kgd<MpReal<250>>(m, kind, x, t, nodes));
    return static_cast<double>(invert_kgd<MpReal<750>>(m, kind, x, t, nodes));
}

}  // namespace kgd
