#pragma once

#include <cmath>
#include <complex>
#include <sstream>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "kgd/error.hpp"
#include "kgd/medium.hpp"

namespace kgd {

/// Binary-float real type with `Digits` decimal digits and no expression templates.
template <unsigned Digits>
using MpReal = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Digits>,
                                             boost::multiprecision::et_off>;

template <class Real>
struct ComplexOf {
    using type = std::complex<Real>;
};

template <unsigned Digits>
struct ComplexOf<MpReal<Digits>> {
    using type = boost::multiprecision::cpp_complex<Digits>;
};

template <class Real>
using ComplexT = typename ComplexOf<Real>::type;

inline constexpr int kDefaultTalbotNodes = 64;

/// Fixed-Talbot inversion of a Laplace transform at time t.
///
/// Contour s(theta) = r theta (cot theta + i), r = 2 nodes / (5 t), sampled at
/// theta_k = k pi / nodes. The sum loses roughly 0.17 nodes decimal digits to
/// cancellation, so nodes >= ~60 need a `Real` wider than double, and the
/// transform must be evaluated in that same precision. Every singularity of
/// the transform has to lie inside the contour.
template <class Real, class Transform>
Real talbot_invert(Transform&& transform, const Real& t, int nodes = kDefaultTalbotNodes) {
    using std::cos;
    using std::exp;
    using std::sin;
    using Cx = ComplexT<Real>;
    if (nodes < 8) throw Error(ErrorCode::InvalidArgument, "Talbot inversion needs nodes >= 8");
    if (!(t > 0)) throw Error(ErrorCode::InvalidArgument, "Talbot inversion needs t > 0");

    auto checked = [&](const Cx& s) {
        const Cx v = transform(s);
        using std::isfinite;
        if (!isfinite(v.real()) || !isfinite(v.imag())) {
            std::ostringstream os;
            os << "transform is not finite at s = (" << static_cast<double>(s.real()) << ", "
               << static_cast<double>(s.imag()) << ")";
            throw Error(ErrorCode::NonFiniteTransform, os.str());
        }
        return v;
    };

    const Real pi = boost::math::constants::pi<Real>();
    const Real r = Real(2 * nodes) / (5 * t);
    Real sum = Real(0.5) * exp(r * t) * checked(Cx(r, Real(0))).real();
    for (int k = 1; k < nodes; ++k) {
        const Real theta = Real(k) * pi / nodes;
        const Real cot = cos(theta) / sin(theta);
        const Cx s(r * theta * cot, r * theta);
        const Real sigma = theta + (theta * cot - 1) * cot;
        const Cx weight(Real(1), sigma);
        const Cx term = exp(s * t) * checked(s) * weight;
        sum += term.real();
    }
    return r / nodes * sum;
}

/// Smallest node count (>= 64) whose contour at time t encloses the branch
/// points of the medium with a 15% margin in height.
int talbot_auto_nodes(const MediumParams& m, double t);

/// Decimal digits needed to absorb the cancellation of a `nodes`-point sum.
int talbot_required_digits(int nodes);

/// Talbot inversion of exp(-(x/c) W)/W (kind N) or of the impulse transform
/// with its wavefront term exp(-(x/c)(s + a/2)) removed (kind Delta), so both
/// invert to the smooth parts of the responses. nodes <= 0 picks
/// talbot_auto_nodes(); the working precision follows from the node count.
double talbot_response(const MediumParams& m, ResponseKind kind, double x, double t,
                       int nodes = 0);

}  // namespace kgd
