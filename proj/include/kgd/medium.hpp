#pragma once

#include <complex>

namespace kgd {

using Complex = std::complex<double>;

enum class Regime { NegativeDelta, PositiveDelta, ZeroDelta };

/// Which response: the impulse response r_delta or the second response r_n.
enum class ResponseKind { Delta, N };

/// Constants of r_tt + a r_t + b r - c^2 r_xx = 0.
///
/// `delta` is the discriminant b - a^2/4 of s^2 + a s + b, which decides
/// between the oscillatory (J) and monotone (I) solutions and between the
/// closed and open steepest descent topologies.
class MediumParams {
public:
    /// Throws InvalidArgument unless a >= 0, b >= 0, c > 0 (all finite).
    MediumParams(double a, double b, double c);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double c() const noexcept { return c_; }
    double delta() const noexcept { return delta_; }
    Regime regime() const noexcept { return regime_; }

    /// sqrt(|delta|): half-distance between the branch points.
    double branch_radius() const noexcept { return radius_; }

private:
    double a_;
    double b_;
    double c_;
    double delta_;
    double radius_;
    Regime regime_;
};

/// A space-time point with its similarity variable mu = x/(c t).
class ObsPoint {
public:
    /// Throws InvalidArgument unless x >= 0, t > 0 and x <= c t.
    ObsPoint(const MediumParams& m, double x, double t);

    double x() const noexcept { return x_; }
    double t() const noexcept { return t_; }
    double mu() const noexcept { return mu_; }
    /// 1/mu; throws InvalidArgument at mu == 0.
    double theta() const;

private:
    double x_;
    double t_;
    double mu_;
};

/// Placement of the branch cuts of sqrt((s + a/2)^2 + delta).
///
/// Both layouts agree for Re s > a/2 - well right of every branch point -
/// and coincide entirely when delta < 0.
enum class CutLayout {
    /// Cut on the straight segment joining the two branch points.
    Segment,
    /// Principal product sqrt(s - b1) sqrt(s - b2): for delta > 0 the cuts are
    /// horizontal rays running left from each branch point. The open steepest
    /// descent branches cross the segment but never these rays.
    LeftRays,
};

/// Distance below which a point counts as lying on a cut.
double cut_tolerance(const MediumParams& m) noexcept;

/// w(s) = sqrt((s + a/2)^2 + delta) on the sheet with w ~ s + a/2 at infinity.
/// Throws BranchPointHit within cut_tolerance() of the selected cut.
Complex branch_sqrt(const MediumParams& m, Complex s, CutLayout cut = CutLayout::Segment);

/// n(s) = w(s)/s. Throws OriginPole at s == 0.
Complex refraction_index(const MediumParams& m, Complex s, CutLayout cut = CutLayout::Segment);

/// F_mu(s) = s - mu w(s). Requires 0 <= mu < 1.
Complex phase_function(const MediumParams& m, double mu, Complex s,
                       CutLayout cut = CutLayout::Segment);

}  // namespace kgd
