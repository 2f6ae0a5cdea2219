#include "kgd/medium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "kgd/error.hpp"

namespace kgd {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::BranchPointHit: return "BranchPointHit";
        case ErrorCode::OriginPole: return "OriginPole";
        case ErrorCode::DegenerateRegime: return "DegenerateRegime";
        case ErrorCode::FrontTooClose: return "FrontTooClose";
        case ErrorCode::WrongRegime: return "WrongRegime";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::PathAuditFailure: return "PathAuditFailure";
        case ErrorCode::NonFiniteIntegrand: return "NonFiniteIntegrand";
        case ErrorCode::NonFiniteTransform: return "NonFiniteTransform";
        case ErrorCode::NotConverged: return "NotConverged";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::UnsupportedPulse: return "UnsupportedPulse";
    }
    return "Unknown";
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

std::string describe(Complex s) {
    std::ostringstream os;
    os.precision(17);
    os << "s = (" << s.real() << ", " << s.imag() << ")";
    return os.str();
}

// Distance from z to the segment [p, q].
double segment_distance(Complex z, Complex p, Complex q) {
    const Complex d = q - p;
    const double len2 = std::norm(d);
    double u = len2 > 0.0 ? ((z - p) * std::conj(d)).real() / len2 : 0.0;
    u = std::clamp(u, 0.0, 1.0);
    return std::abs(z - (p + u * d));
}

// Distance from z to the horizontal ray {X <= 0, Im = y0}.
double left_ray_distance(Complex z, double y0) {
    if (z.real() <= 0.0) return std::abs(z.imag() - y0);
    return std::hypot(z.real(), z.imag() - y0);
}

}  // namespace

MediumParams::MediumParams(double a, double b, double c) : a_(a), b_(b), c_(c) {
    if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c)) || a < 0.0 || b < 0.0 ||
        c <= 0.0) {
        std::ostringstream os;
        os << "medium requires a >= 0, b >= 0, c > 0 (got a=" << a << ", b=" << b << ", c=" << c
           << ")";
        throw Error(ErrorCode::InvalidArgument, os.str());
    }
    const double quarter_a2 = 0.25 * a * a;
    delta_ = b - quarter_a2;
    const double scale = std::max(b, quarter_a2);
    if (std::abs(delta_) <= 64.0 * kEps * scale) {
        regime_ = Regime::ZeroDelta;
        delta_ = 0.0;
    } else {
        regime_ = delta_ < 0.0 ? Regime::NegativeDelta : Regime::PositiveDelta;
    }
    radius_ = std::sqrt(std::abs(delta_));
}

ObsPoint::ObsPoint(const MediumParams& m, double x, double t) : x_(x), t_(t) {
    if (!(std::isfinite(x) && std::isfinite(t)) || x < 0.0 || t <= 0.0) {
        throw Error(ErrorCode::InvalidArgument, "observation point requires x >= 0 and t > 0");
    }
    mu_ = x / (m.c() * t);
    if (mu_ > 1.0) {
        throw Error(ErrorCode::InvalidArgument, "observation point lies ahead of the wavefront");
    }
}

double ObsPoint::theta() const {
    if (mu_ == 0.0) throw Error(ErrorCode::InvalidArgument, "theta undefined at x = 0");
    return 1.0 / mu_;
}

double cut_tolerance(const MediumParams& m) noexcept {
    return 1e-12 * (1.0 + m.branch_radius());
}

Complex branch_sqrt(const MediumParams& m, Complex s, CutLayout cut) {
    const Complex z = s + 0.5 * m.a();
    const double r = m.branch_radius();
    const double tol = cut_tolerance(m);

    switch (m.regime()) {
        case Regime::ZeroDelta:
            if (std::abs(z) <= tol) throw Error(ErrorCode::BranchPointHit, describe(s));
            return z;

        case Regime::NegativeDelta:
            // Principal roots: the rays left of -r cancel, leaving [-r, r].
            if (segment_distance(z, Complex(-r, 0.0), Complex(r, 0.0)) <= tol) {
                throw Error(ErrorCode::BranchPointHit, describe(s));
            }
            return std::sqrt(z - r) * std::sqrt(z + r);

        case Regime::PositiveDelta:
            if (cut == CutLayout::LeftRays) {
                if (left_ray_distance(z, r) <= tol || left_ray_distance(z, -r) <= tol) {
                    throw Error(ErrorCode::BranchPointHit, describe(s));
                }
                return std::sqrt(z - Complex(0.0, r)) * std::sqrt(z + Complex(0.0, r));
            }
            if (segment_distance(z, Complex(0.0, -r), Complex(0.0, r)) <= tol) {
                throw Error(ErrorCode::BranchPointHit, describe(s));
            }
            {
                // Rotate by -i so both cuts point down the imaginary axis and
                // overlap below -i r; the rotation itself is exact.
                const Complex v(z.imag(), -z.real());
                return Complex(0.0, 1.0) * std::sqrt(v - r) * std::sqrt(v + r);
            }
    }
    return z;
}

Complex refraction_index(const MediumParams& m, Complex s, CutLayout cut) {
    if (s == Complex(0.0, 0.0)) throw Error(ErrorCode::OriginPole, "n(s) has a pole at s = 0");
    return branch_sqrt(m, s, cut) / s;
}

Complex phase_function(const MediumParams& m, double mu, Complex s, CutLayout cut) {
    if (!(mu >= 0.0 && mu < 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "phase function requires 0 <= mu < 1");
    }
    if (mu == 0.0) return s;
    return s - mu * branch_sqrt(m, s, cut);
}

}  // namespace kgd
