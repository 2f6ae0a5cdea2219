#include "kgd/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <span>
#include <sstream>
#include <vector>

#include "kgd/error.hpp"

namespace kgd {

namespace {

// Abscissae (non-negative half, descending, centre last) and weights of the
// nested Gauss/Kronrod pairs, as tabulated in QUADPACK.
constexpr std::array<double, 8> kXgk15 = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk15 = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss-7 weights for kXgk15[1], [3], [5], [7].
constexpr std::array<double, 4> kWg7 = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr std::array<double, 11> kXgk21 = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk21 = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208814823820, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss-10 weights for kXgk21[1], [3], ..., [9]; the centre is Kronrod-only.
constexpr std::array<double, 5> kWg10 = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Rule {
    std::span<const double> xgk;
    std::span<const double> wgk;
    std::span<const double> wg;
    bool centre_is_gauss;
};

Rule rule_for(GaussKronrodRule r) {
    if (r == GaussKronrodRule::G10K21) return {kXgk21, kWgk21, kWg10, false};
    return {kXgk15, kWgk15, kWg7, true};
}

struct Segment {
    double lo;
    double hi;
    Complex value;
    double err;
};

// Largest error first; among equal errors the leftmost interval wins.
struct WorseFirst {
    bool operator()(const Segment& a, const Segment& b) const {
        if (a.err != b.err) return a.err < b.err;
        return a.lo > b.lo;
    }
};

Complex eval(const RealIntegrand& f, double u) {
    const Complex v = f(u);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        std::ostringstream os;
        os.precision(17);
        os << "integrand is not finite at u = " << u;
        throw Error(ErrorCode::NonFiniteIntegrand, os.str());
    }
    return v;
}

Segment apply_rule(const Rule& rule, const RealIntegrand& f, double lo, double hi) {
    const double centre = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const std::size_t n = rule.xgk.size();

    Complex kronrod = 0.0;
    Complex gauss = 0.0;
    double abs_sum = 0.0;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const double dx = half * rule.xgk[j];
        const Complex pair = eval(f, centre - dx) + eval(f, centre + dx);
        kronrod += rule.wgk[j] * pair;
        abs_sum += rule.wgk[j] * std::abs(pair);
        if (j % 2 == 1) gauss += rule.wg[j / 2] * pair;
    }
    const Complex fc = eval(f, centre);
    kronrod += rule.wgk[n - 1] * fc;
    abs_sum += rule.wgk[n - 1] * std::abs(fc);
    if (rule.centre_is_gauss) gauss += rule.wg[rule.wg.size() - 1] * fc;

    kronrod *= half;
    gauss *= half;
    abs_sum *= std::abs(half);
    const double diff = std::abs(kronrod - gauss);
    const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * abs_sum;
    return {lo, hi, kronrod, std::max(diff, roundoff)};
}

double legendre(int n, double x) {
    double p0 = 1.0;
    double p1 = x;
    if (n == 0) return p0;
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

}  // namespace

void QuadratureSettings::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol >= 0.0) || max_intervals < 1) {
        throw Error(ErrorCode::InvalidArgument,
                    "quadrature settings need abs_tol > 0, rel_tol >= 0, max_intervals >= 1");
    }
}

QuadResult integrate(const RealIntegrand& f, double lo, double hi,
                     const QuadratureSettings& settings) {
    settings.validate();
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw Error(ErrorCode::InvalidArgument, "integration needs finite lo < hi");
    }
    const Rule rule = rule_for(settings.rule);

    std::vector<Segment> heap;
    heap.reserve(static_cast<std::size_t>(settings.max_intervals));
    heap.push_back(apply_rule(rule, f, lo, hi));

    QuadResult out;
    for (;;) {
        Complex total = 0.0;
        double err = 0.0;
        for (const auto& s : heap) {
            total += s.value;
            err += s.err;
        }
        out.value = total;
        out.err_estimate = err;
        out.intervals_used = static_cast<int>(heap.size());
        if (err <= std::max(settings.abs_tol, settings.rel_tol * std::abs(total))) {
            out.converged = true;
            return out;
        }
        if (static_cast<int>(heap.size()) >= settings.max_intervals) return out;

        std::pop_heap(heap.begin(), heap.end(), WorseFirst{});
        const Segment worst = heap.back();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi)) {
            // Interval exhausted at machine resolution.
            std::push_heap(heap.begin(), heap.end(), WorseFirst{});
            return out;
        }
        heap.back() = apply_rule(rule, f, worst.lo, mid);
        std::push_heap(heap.begin(), heap.end(), WorseFirst{});
        heap.push_back(apply_rule(rule, f, mid, worst.hi));
        std::push_heap(heap.begin(), heap.end(), WorseFirst{});
    }
}

QuadResult integrate_path(const SdpPath& path, const std::vector<ParamInterval>& intervals,
                          const PointIntegrand& g, const QuadratureSettings& settings) {
    QuadResult total;
    total.converged = true;
    for (const auto& iv : intervals) {
        const int branch = iv.branch;
        const QuadResult part = integrate(
            [&](double u) {
                const PathPoint p = path.at(branch, u);
                return g(p.point) * p.tangent;
            },
            iv.lo, iv.hi, settings);
        total.value += part.value;
        total.err_estimate += part.err_estimate;
        total.intervals_used += part.intervals_used;
        total.converged = total.converged && part.converged;
    }
    return total;
}

QuadResult integrate_path(const SdpPath& path, const PointIntegrand& g,
                          const QuadratureSettings& settings) {
    return integrate_path(path, path.intervals(), g, settings);
}

double gauss_kronrod_self_check() {
    double worst = 0.0;
    for (GaussKronrodRule r : {GaussKronrodRule::G7K15, GaussKronrodRule::G10K21}) {
        const Rule rule = rule_for(r);
        const std::size_t n = rule.xgk.size();
        const int gauss_exact = r == GaussKronrodRule::G7K15 ? 13 : 19;
        const int kronrod_exact = r == GaussKronrodRule::G7K15 ? 22 : 31;
        for (int deg = 0; deg <= kronrod_exact; ++deg) {
            double k = rule.wgk[n - 1] * legendre(deg, 0.0);
            double g = rule.centre_is_gauss ? rule.wg[rule.wg.size() - 1] * legendre(deg, 0.0)
                                            : 0.0;
            for (std::size_t j = 0; j + 1 < n; ++j) {
                const double pair = legendre(deg, rule.xgk[j]) + legendre(deg, -rule.xgk[j]);
                k += rule.wgk[j] * pair;
                if (j % 2 == 1) g += rule.wg[j / 2] * pair;
            }
            const double exact = deg == 0 ? 2.0 : 0.0;
            worst = std::max(worst, std::abs(k - exact));
            if (deg <= gauss_exact) worst = std::max(worst, std::abs(g - exact));
        }
    }
    return worst;
}

}  // namespace kgd
