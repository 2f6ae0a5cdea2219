#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "kgd/medium.hpp"

namespace kgd {

inline constexpr double kDefaultFrontEpsilon = 1e-6;

/// Saddle points of F_mu and the values of F_mu there.
///
/// Labels follow the ordering of the saddle points (p1 left/below, p2
/// right/above). The omega values are measured, not assigned: each is
/// Im F_mu(p_k) under the library's branch of the square root.
struct SaddleData {
    Complex p1;
    Complex p2;
    Complex phi1;
    Complex phi2;
    double omega1 = 0.0;
    double omega2 = 0.0;
};

struct PathPoint {
    Complex point;
    Complex tangent;
};

/// Closed path for delta < 0: s(u) = center + alpha cos u + i beta sin u.
struct EllipseGeometry {
    double center = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
};

/// One branch of the open path for delta > 0, parametrised by u = Im s.
///
/// Ordinates are signed: the lower branch (index 1) lives on negative u.
/// `near` and `far` are the asymptote ordinates closest to and farthest from
/// the real axis; the branch runs between them and passes through the saddle
/// ordinate `u_saddle`, where Re s = center.
struct OpenBranch {
    int index = 0;
    double omega = 0.0;
    double u_saddle = 0.0;
    double near = 0.0;
    double far = 0.0;
    double center = 0.0;

    double lower() const noexcept { return near < far ? near : far; }
    double upper() const noexcept { return near < far ? far : near; }
};

struct OpenPairGeometry {
    OpenBranch lower;  // through p1
    OpenBranch upper;  // through p2
    double u_minus = 0.0;
    double u_plus = 0.0;
};

/// One stretch of parameter to integrate over; orientation is always
/// increasing u, which already matches the counter-clockwise sense.
struct ParamInterval {
    int branch = 0;  // 0 for the ellipse, 1 or 2 for open branches
    double lo = 0.0;
    double hi = 0.0;
};

struct AuditRow {
    int branch = 0;
    double u = 0.0;
    Complex s;
    Complex F;
};

struct PathAudit {
    std::vector<AuditRow> rows;
    /// max |Im F - omega| / (1 + |Re F|) over the grid.
    double max_level_residual = 0.0;
    /// |F'(p_k)| / (1 + |p_k|) from a sixth-order central difference.
    double saddle_residual[2] = {0.0, 0.0};
    /// Re F never increases when moving away from the maximising saddle.
    bool descent_ok = true;
};

struct PathOptions {
    double front_epsilon = kDefaultFrontEpsilon;
    int audit_points = 257;
};

SaddleData saddle_points(const MediumParams& m, double mu,
                         double front_epsilon = kDefaultFrontEpsilon);

/// (b1, b2): real and ordered for delta < 0, conjugate with Im b1 < 0 for delta > 0.
std::pair<Complex, Complex> branch_points(const MediumParams& m);

PathPoint ellipse_path(const MediumParams& m, double mu, double u,
                       double front_epsilon = kDefaultFrontEpsilon);

/// Throws OutOfRange unless (-1)^k u lies strictly inside (u_minus, u_plus)
/// with at least 1e-12 (u_plus - u_minus) to spare at each end.
PathPoint open_branch_path(const MediumParams& m, double mu, int branch, double u,
                           double front_epsilon = kDefaultFrontEpsilon);

/// Real part of the open-branch abscissa, g_k(u) + a/2, and its u-derivative.
std::pair<double, double> open_branch_offset(const OpenBranch& br, double mu, double u) noexcept;

class SdpPath {
public:
    const MediumParams& medium() const noexcept { return medium_; }
    double mu() const noexcept { return mu_; }
    const SaddleData& saddles() const noexcept { return saddles_; }
    Complex b1() const noexcept { return b1_; }
    Complex b2() const noexcept { return b2_; }
    bool closed() const noexcept { return std::holds_alternative<EllipseGeometry>(shape_); }
    const EllipseGeometry& ellipse() const { return std::get<EllipseGeometry>(shape_); }
    const OpenPairGeometry& open_pair() const { return std::get<OpenPairGeometry>(shape_); }
    const PathAudit& audit() const noexcept { return audit_; }

    /// Sheet on which the integrand is continuous along this path.
    CutLayout cut() const noexcept { return closed() ? CutLayout::Segment : CutLayout::LeftRays; }

    /// Point and tangent; branch 0 for the ellipse, 1 or 2 otherwise.
    PathPoint at(int branch, double u) const;

    /// Im F along the given branch.
    double level(int branch) const;

    /// Parameter intervals covering the whole path. For open branches with
    /// t > 0 the tails are clipped where exp(t (Re F - Re F(saddle))) < 1e-16.
    std::vector<ParamInterval> intervals(double t = 0.0) const;

    /// The half of the path whose conjugate mirror is the other half.
    std::vector<ParamInterval> half_intervals(double t = 0.0) const;

private:
    friend SdpPath build_path(const MediumParams& m, double mu, const PathOptions& opts);

    SdpPath(const MediumParams& m, double mu) : medium_(m), mu_(mu) {}

    std::pair<double, double> clip_upper_branch(double t) const;

    MediumParams medium_;
    double mu_;
    SaddleData saddles_;
    Complex b1_;
    Complex b2_;
    std::variant<EllipseGeometry, OpenPairGeometry> shape_;
    PathAudit audit_;
};

/// Builds and audits the full steepest descent path. Throws FrontTooClose,
/// DegenerateRegime, or PathAuditFailure when Im F drifts off its level.
SdpPath build_path(const MediumParams& m, double mu, const PathOptions& opts = {});

}  // namespace kgd
