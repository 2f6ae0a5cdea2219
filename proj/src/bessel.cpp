#include "kgd/bessel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "kgd/error.hpp"

namespace kgd {

namespace detail {

namespace {

using Wide = long double;

void check_argument(double z) {
    if (std::isnan(z)) throw Error(ErrorCode::InvalidArgument, "Bessel argument is NaN");
}

}  // namespace

double bessel_series(BesselKind kind, int order, double z) {
    const Wide x = std::abs(static_cast<Wide>(z));
    const Wide q = x * x / 4;
    const Wide sign = kind == BesselKind::J ? -1 : 1;
    Wide term = order == 0 ? Wide(1) : x / 2;
    Wide sum = term;
    for (int k = 1; k < 500; ++k) {
        term *= sign * q / (static_cast<Wide>(k) * static_cast<Wide>(k + order));
        sum += term;
        if (k > x && std::abs(term) <= 1e-21L * std::abs(sum)) break;
    }
    if (kind == BesselKind::I) sum *= std::exp(-x);
    // J1 and I1 are odd.
    if (order == 1 && z < 0) sum = -sum;
    return static_cast<double>(sum);
}

double bessel_asymptotic(BesselKind kind, int order, double z) {
    const Wide x = std::abs(static_cast<Wide>(z));
    const Wide mu4 = 4 * order * order;
    const Wide eight_x = 8 * x;

    // a_k(nu) / x^k, accumulated term by term; stop at the smallest term.
    Wide p = 1;       // even k (J: alternating in k/2)
    Wide qsum = 0;    // odd k
    Wide isum = 1;    // all k with (-1)^k, for I
    Wide term = 1;
    Wide last = std::numeric_limits<Wide>::infinity();
    for (int k = 1; k < 200; ++k) {
        const Wide odd = static_cast<Wide>(2 * k - 1);
        term *= (mu4 - odd * odd) / (static_cast<Wide>(k) * eight_x);
        const Wide mag = std::abs(term);
        if (mag >= last) break;
        last = mag;
        if (k % 2 == 0) {
            p += (k % 4 == 0 ? term : -term);
        } else {
            qsum += ((k - 1) % 4 == 0 ? term : -term);
        }
        isum += (k % 2 == 0 ? term : -term);
        if (mag < 1e-21L) break;
    }

    Wide result;
    if (kind == BesselKind::I) {
        result = isum / std::sqrt(2 * std::numbers::pi_v<Wide> * x);
    } else {
        const Wide c = std::cos(x);
        const Wide s = std::sin(x);
        const Wide r2 = std::numbers::sqrt2_v<Wide>;
        // chi = x - (2 nu + 1) pi / 4, expanded to avoid subtracting pi/4 from x.
        const Wide cos_chi = order == 0 ? (c + s) / r2 : (s - c) / r2;
        const Wide sin_chi = order == 0 ? (s - c) / r2 : -(s + c) / r2;
        result = std::sqrt(2 / (std::numbers::pi_v<Wide> * x)) * (p * cos_chi - qsum * sin_chi);
    }
    if (order == 1 && z < 0) result = -result;
    return static_cast<double>(result);
}

double bessel_crossover_mismatch() {
    double worst = 0.0;
    for (double z : {kBesselCrossover - 1.0, kBesselCrossover, kBesselCrossover + 1.0}) {
        for (int order : {0, 1}) {
            worst = std::max(worst, std::abs(bessel_series(BesselKind::J, order, z) -
                                             bessel_asymptotic(BesselKind::J, order, z)));
            const double is = bessel_series(BesselKind::I, order, z);
            worst = std::max(worst,
                             std::abs(is - bessel_asymptotic(BesselKind::I, order, z)) / is);
        }
    }
    return worst;
}

namespace {

double evaluate(BesselKind kind, int order, double z) {
    check_argument(z);
    if (std::isinf(z)) {
        if (kind == BesselKind::J) return 0.0;
        return order == 1 && z < 0 ? 0.0 : 1.0 / std::sqrt(2 * std::numbers::pi * std::abs(z));
    }
    return std::abs(z) <= kBesselCrossover ? bessel_series(kind, order, z)
                                           : bessel_asymptotic(kind, order, z);
}

double unscale(double scaled, double z) {
    const double x = std::abs(z);
    if (scaled == 0.0) return 0.0;
    const double log_mag = std::log(std::abs(scaled)) + x;
    if (log_mag >= std::log(std::numeric_limits<double>::max())) {
        std::ostringstream os;
        os << "modified Bessel function overflows at z = " << z;
        throw Error(ErrorCode::Overflow, os.str());
    }
    return scaled * std::exp(x);
}

}  // namespace

}  // namespace detail

double bessel_j0(double z) { return detail::evaluate(detail::BesselKind::J, 0, z); }
double bessel_j1(double z) { return detail::evaluate(detail::BesselKind::J, 1, z); }
double bessel_i0_scaled(double z) { return detail::evaluate(detail::BesselKind::I, 0, z); }
double bessel_i1_scaled(double z) { return detail::evaluate(detail::BesselKind::I, 1, z); }
double bessel_i0(double z) { return detail::unscale(bessel_i0_scaled(z), z); }
double bessel_i1(double z) { return detail::unscale(bessel_i1_scaled(z), z); }

}  // namespace kgd
