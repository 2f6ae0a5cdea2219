#include "kgd/sdp_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "kgd/error.hpp"

namespace kgd {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kLevelTolerance = 1e-9;
// ln(1e-16): tails below this fraction of the saddle magnitude are dropped.
const double kLogClip = std::log(1e-16);
constexpr double kMinEndGap = 1e-12;

void check_mu(double mu, double front_epsilon) {
    if (!(mu > 0.0)) {
        throw Error(ErrorCode::OutOfRange, "steepest descent path requires mu > 0");
    }
    if (!(mu < 1.0 - front_epsilon)) {
        std::ostringstream os;
        os.precision(17);
        os << "mu = " << mu << " is not below 1 - " << front_epsilon;
        throw Error(ErrorCode::FrontTooClose, os.str());
    }
}

void check_not_degenerate(const MediumParams& m) {
    if (m.regime() == Regime::ZeroDelta) {
        throw Error(ErrorCode::DegenerateRegime,
                    "delta = 0: saddle points coincide with the branch point");
    }
}

EllipseGeometry make_ellipse(const MediumParams& m, double mu) {
    EllipseGeometry e;
    e.center = -0.5 * m.a();
    e.alpha = std::sqrt(-m.delta() / (1.0 - mu * mu));
    e.beta = mu * e.alpha;
    return e;
}

PathPoint ellipse_point(const EllipseGeometry& e, double u) {
    const double cu = std::cos(u);
    const double su = std::sin(u);
    return {Complex(e.center + e.alpha * cu, e.beta * su), Complex(-e.alpha * su, e.beta * cu)};
}

OpenPairGeometry make_open_pair(const MediumParams& m, double mu, const SaddleData& sd) {
    const double d = m.delta();
    OpenPairGeometry g;
    g.u_minus = std::sqrt(d * (1.0 - mu) / (1.0 + mu));
    g.u_plus = std::sqrt(d * (1.0 + mu) / (1.0 - mu));

    g.lower.index = 1;
    g.lower.omega = sd.omega1;
    g.lower.u_saddle = sd.p1.imag();
    g.lower.near = -g.u_minus;
    g.lower.far = -g.u_plus;
    g.lower.center = -0.5 * m.a();

    g.upper.index = 2;
    g.upper.omega = sd.omega2;
    g.upper.u_saddle = sd.p2.imag();
    g.upper.near = g.u_minus;
    g.upper.far = g.u_plus;
    g.upper.center = -0.5 * m.a();
    return g;
}

PathPoint open_point(const OpenBranch& br, double mu, double u) {
    const auto [x, dx] = open_branch_offset(br, mu, u);
    return {Complex(br.center + x, u), Complex(dx, 1.0)};
}

double min_end_gap(const OpenPairGeometry& g) { return kMinEndGap * (g.u_plus - g.u_minus); }

// Chebyshev-Lobatto points on [lo, hi], ascending.
std::vector<double> lobatto(double lo, double hi, int n) {
    std::vector<double> u(static_cast<std::size_t>(n));
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    for (int j = 0; j < n; ++j) {
        u[static_cast<std::size_t>(j)] =
            mid - half * std::cos(std::numbers::pi * j / static_cast<double>(n - 1));
    }
    u.front() = lo;
    u.back() = hi;
    return u;
}

// Sixth-order central difference of F along the real direction. F is
// evaluated in extended precision (sheet taken from the double branch) so the
// eps/h round-off floor stays small when the saddle hugs a branch point.
double saddle_residual(const MediumParams& m, double mu, Complex p, CutLayout cut) {
    using Wide = std::complex<long double>;
    const auto [b1, b2] = branch_points(m);
    const double dist = std::min(std::abs(p - b1), std::abs(p - b2));
    const double h = 1e-2 * std::min(dist, 1.0 + std::abs(p));
    // Saddle merged with its branch point to working precision: unresolvable.
    if (dist <= 100.0 * cut_tolerance(m)) return std::numeric_limits<double>::quiet_NaN();
    const long double a = m.a();
    const long double delta = static_cast<long double>(m.b()) - a * a / 4;
    auto F = [&](int k) {
        const Complex s = p + static_cast<double>(k) * h;
        const Wide z = Wide(s) + a / 2;
        Wide w = std::sqrt(z * z + delta);
        const Complex guide = branch_sqrt(m, s, cut);
        if ((w * std::conj(Wide(guide))).real() < 0) w = -w;
        return Wide(s) - static_cast<long double>(mu) * w;
    };
    const Wide d = (-F(-3) + 9.0L * F(-2) - 45.0L * F(-1) + 45.0L * F(1) - 9.0L * F(2) + F(3)) /
                   (60.0L * h);
    return static_cast<double>(std::abs(d)) / (1.0 + std::abs(p));
}

bool descent_holds(const std::vector<AuditRow>& rows, std::size_t first, std::size_t last,
                   double u_peak) {
    for (std::size_t i = first; i + 1 < last; ++i) {
        const double f0 = rows[i].F.real();
        const double f1 = rows[i + 1].F.real();
        const double tol = 16.0 * kEps * (1.0 + std::max(std::abs(f0), std::abs(f1)));
        if (rows[i + 1].u <= u_peak) {
            if (f1 < f0 - tol) return false;  // climbing toward the peak
        } else if (rows[i].u >= u_peak) {
            if (f1 > f0 + tol) return false;  // descending away from it
        }
    }
    return true;
}

}  // namespace

SaddleData saddle_points(const MediumParams& m, double mu, double front_epsilon) {
    check_not_degenerate(m);
    check_mu(mu, front_epsilon);
    const double center = -0.5 * m.a();
    const double k = std::sqrt(std::abs(m.delta()) / (1.0 - mu * mu));
    SaddleData sd;
    if (m.regime() == Regime::NegativeDelta) {
        sd.p1 = Complex(center - k, 0.0);
        sd.p2 = Complex(center + k, 0.0);
    } else {
        sd.p1 = Complex(center, -k);
        sd.p2 = Complex(center, k);
    }
    // As mu -> 0 a saddle can land on its branch point, where w = 0.
    auto phase_at = [&](Complex p) {
        try {
            return phase_function(m, mu, p);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::BranchPointHit) throw;
            return p;
        }
    };
    sd.phi1 = phase_at(sd.p1);
    sd.phi2 = phase_at(sd.p2);
    sd.omega1 = sd.phi1.imag();
    sd.omega2 = sd.phi2.imag();
    return sd;
}

std::pair<Complex, Complex> branch_points(const MediumParams& m) {
    check_not_degenerate(m);
    const double center = -0.5 * m.a();
    const double r = m.branch_radius();
    if (m.regime() == Regime::NegativeDelta) {
        return {Complex(center - r, 0.0), Complex(center + r, 0.0)};
    }
    return {Complex(center, -r), Complex(center, r)};
}

PathPoint ellipse_path(const MediumParams& m, double mu, double u, double front_epsilon) {
    if (m.regime() != Regime::NegativeDelta) {
        throw Error(ErrorCode::WrongRegime, "the closed path exists only for delta < 0");
    }
    check_mu(mu, front_epsilon);
    return ellipse_point(make_ellipse(m, mu), u);
}

std::pair<double, double> open_branch_offset(const OpenBranch& br, double mu, double u) noexcept {
    // The radicand of the implicit curve has a double root at the saddle
    // ordinate, so the square root factors out and the curve is smooth there.
    const double p = (u - br.omega) * (u - br.u_saddle);
    const double dp = 2.0 * u - br.omega - br.u_saddle;
    const double q = (u - br.far) * (br.near - u);
    const double dq = br.near + br.far - 2.0 * u;
    const double sq = std::sqrt(q);
    const double x = -p / (mu * sq);
    const double dx = -(dp * q - 0.5 * p * dq) / (mu * q * sq);
    return {x, dx};
}

PathPoint open_branch_path(const MediumParams& m, double mu, int branch, double u,
                           double front_epsilon) {
    if (m.regime() != Regime::PositiveDelta) {
        throw Error(ErrorCode::WrongRegime, "the open path pair exists only for delta > 0");
    }
    if (branch != 1 && branch != 2) {
        throw Error(ErrorCode::OutOfRange, "open branch index must be 1 or 2");
    }
    const SaddleData sd = saddle_points(m, mu, front_epsilon);
    const OpenPairGeometry g = make_open_pair(m, mu, sd);
    const OpenBranch& br = branch == 1 ? g.lower : g.upper;
    const double gap = min_end_gap(g);
    if (!(u > br.lower() + gap && u < br.upper() - gap)) {
        std::ostringstream os;
        os.precision(17);
        os << "u = " << u << " outside the open interval (" << br.lower() << ", " << br.upper()
           << ") of branch " << branch;
        throw Error(ErrorCode::OutOfRange, os.str());
    }
    return open_point(br, mu, u);
}

PathPoint SdpPath::at(int branch, double u) const {
    if (closed()) return ellipse_point(ellipse(), u);
    const auto& g = open_pair();
    return open_point(branch == 1 ? g.lower : g.upper, mu_, u);
}

double SdpPath::level(int branch) const {
    if (closed()) return 0.0;
    return branch == 1 ? saddles_.omega1 : saddles_.omega2;
}

std::pair<double, double> SdpPath::clip_upper_branch(double t) const {
    const auto& g = open_pair();
    const OpenBranch& br = g.upper;
    const double gap = min_end_gap(g);
    double lo = br.near + gap;
    double hi = br.far - gap;
    if (!(t > 0.0)) return {lo, hi};

    const double peak = saddles_.phi2.real();
    auto excess = [&](double u) {
        const Complex F = phase_function(medium_, mu_, open_point(br, mu_, u).point, cut());
        return t * (F.real() - peak) - kLogClip;
    };
    // Re F decreases monotonically from the saddle toward either asymptote.
    auto bisect = [&](double inside, double outside) {
        if (excess(outside) >= 0.0) return outside;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (inside + outside);
            if (mid == inside || mid == outside) break;
            (excess(mid) >= 0.0 ? inside : outside) = mid;
        }
        return outside;
    };
    lo = bisect(br.u_saddle, lo);
    hi = bisect(br.u_saddle, hi);
    return {lo, hi};
}

std::vector<ParamInterval> SdpPath::intervals(double t) const {
    if (closed()) return {{0, 0.0, 2.0 * std::numbers::pi}};
    const auto [lo, hi] = clip_upper_branch(t);
    return {{1, -hi, -lo}, {2, lo, hi}};
}

std::vector<ParamInterval> SdpPath::half_intervals(double t) const {
    if (closed()) return {{0, 0.0, std::numbers::pi}};
    const auto [lo, hi] = clip_upper_branch(t);
    return {{2, lo, hi}};
}

SdpPath build_path(const MediumParams& m, double mu, const PathOptions& opts) {
    check_not_degenerate(m);
    check_mu(mu, opts.front_epsilon);
    if (opts.audit_points < 3) {
        throw Error(ErrorCode::InvalidArgument, "audit grid needs at least 3 points");
    }

    SdpPath path(m, mu);
    path.saddles_ = saddle_points(m, mu, opts.front_epsilon);
    std::tie(path.b1_, path.b2_) = branch_points(m);

    PathAudit& audit = path.audit_;
    const CutLayout cut = m.regime() == Regime::NegativeDelta ? CutLayout::Segment
                                                              : CutLayout::LeftRays;
    auto add_rows = [&](int branch, const std::vector<double>& us) {
        for (double u : us) {
            const Complex s = path.at(branch, u).point;
            audit.rows.push_back({branch, u, s, phase_function(m, mu, s, cut)});
        }
    };

    if (m.regime() == Regime::NegativeDelta) {
        path.shape_ = make_ellipse(m, mu);
        add_rows(0, lobatto(0.0, 2.0 * std::numbers::pi, opts.audit_points));
        audit.descent_ok = descent_holds(audit.rows, 0, audit.rows.size() / 2 + 1, 0.0) &&
                           descent_holds(audit.rows, audit.rows.size() / 2, audit.rows.size(),
                                         2.0 * std::numbers::pi);
    } else {
        path.shape_ = make_open_pair(m, mu, path.saddles_);
        const auto& g = path.open_pair();
        const double gap = min_end_gap(g);
        add_rows(1, lobatto(g.lower.lower() + gap, g.lower.upper() - gap, opts.audit_points));
        const std::size_t split = audit.rows.size();
        add_rows(2, lobatto(g.upper.lower() + gap, g.upper.upper() - gap, opts.audit_points));
        audit.descent_ok = descent_holds(audit.rows, 0, split, g.lower.u_saddle) &&
                           descent_holds(audit.rows, split, audit.rows.size(), g.upper.u_saddle);
    }

    for (const auto& row : audit.rows) {
        const double level = path.level(row.branch);
        audit.max_level_residual = std::max(
            audit.max_level_residual, std::abs(row.F.imag() - level) / (1.0 + std::abs(row.F.real())));
    }
    audit.saddle_residual[0] = saddle_residual(m, mu, path.saddles_.p1, cut);
    audit.saddle_residual[1] = saddle_residual(m, mu, path.saddles_.p2, cut);

    if (!(audit.max_level_residual <= kLevelTolerance)) {
        std::ostringstream os;
        os << "Im F drifts by " << audit.max_level_residual << " (relative) along the path";
        throw Error(ErrorCode::PathAuditFailure, os.str());
    }
    return path;
}

}  // namespace kgd
