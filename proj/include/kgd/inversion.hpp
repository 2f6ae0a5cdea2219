#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string_view>
#include <variant>
#include <vector>

#include "kgd/medium.hpp"
#include "kgd/quadrature.hpp"
#include "kgd/sdp_geometry.hpp"

namespace kgd {

enum class Method { SdpFull, SdpHalf, Exact, Talbot, Degenerate };

std::string_view to_string(Method m);

struct ResponseSample {
    double x = 0.0;
    double t = 0.0;
    /// Smooth part of the response; the delta(t - x/c) term is reported
    /// separately through wavefront_coeff.
    double value = 0.0;
    double err_estimate = 0.0;
    /// |Im| of the full-path integral; zero for the half-path shortcut.
    double imag_residual = 0.0;
    Method method = Method::SdpHalf;
    bool converged = true;
    /// Coefficient of delta(t - x/c): exp(-a x / 2c) for r_delta, 0 for r_n.
    double wavefront_coeff = 0.0;
};

/// exp(s t - (x/c) W(s)) / (2 pi i), W the branch square root on `cut`.
Complex integrand_delta(const MediumParams& m, double x, double t, Complex s,
                        CutLayout cut = CutLayout::Segment);

/// integrand_delta / W(s).
Complex integrand_n(const MediumParams& m, double x, double t, Complex s,
                    CutLayout cut = CutLayout::Segment);

struct SolverOptions {
    QuadratureSettings quadrature;
    /// 2 Re of the upper/first half instead of the whole path.
    bool use_half = true;
    double front_epsilon = kDefaultFrontEpsilon;
    int audit_points = 257;
};

/// Memo of audited paths keyed by mu on a 1e-12 grid. Insert-only; lookups
/// and inserts are serialised, and a published path is never replaced.
class PathCache {
public:
    std::shared_ptr<const SdpPath> get(const MediumParams& m, double mu, const PathOptions& opts);
    std::size_t size() const;

private:
    mutable std::mutex mutex_;
    std::map<long long, std::shared_ptr<const SdpPath>> paths_;
};

/// Integral of the response integrand along an already-built path. The path
/// may belong to a nearby mu: any path homotopic to the Bromwich line gives
/// the same integral.
ResponseSample response_on_path(const SdpPath& path, ResponseKind kind, double x, double t,
                                const QuadratureSettings& settings, bool use_half);

/// r_delta (smooth part) or r_n at (x, t) by integration along the steepest
/// descent path. Handles x = 0 and delta = 0 in closed form. Throws
/// FrontTooClose unless mu < 1 - front_epsilon. Non-convergence is reported
/// through ResponseSample::converged.
ResponseSample response_sdp(const MediumParams& m, ResponseKind kind, double x, double t,
                            const SolverOptions& opts = {}, PathCache* cache = nullptr);

/// Closed-form answer as a ResponseSample (method Exact).
ResponseSample response_exact(const MediumParams& m, ResponseKind kind, double x, double t);

struct DiracDelta {};
struct UnitStep {};
/// Piecewise-linear pulse through (times[i], values[i]), zero outside.
struct TabulatedPulse {
    std::vector<double> times;
    std::vector<double> values;
};
struct CallablePulse {
    std::function<double(double)> fn;
    /// Times where fn has kinks or jumps; integration splits there.
    std::vector<double> breakpoints;
};

using InputPulse = std::variant<DiracDelta, UnitStep, TabulatedPulse, CallablePulse>;

/// Throws UnsupportedPulse unless the table has >= 2 points, strictly
/// increasing non-negative times and finite values.
void validate_pulse(const InputPulse& pulse);

/// Value of the pulse at time t (delta and step: 0/1 conventions of the
/// continuous part, i.e. 0 and Theta(t)).
double pulse_value(const InputPulse& pulse, double t);

struct ConvolveOptions {
    SolverOptions response;
    QuadratureSettings outer{1e-10, 1e-9, 400, GaussKronrodRule::G7K15};
    /// Use the closed-form responses inside the time integral.
    bool use_exact_response = false;
};

struct ConvolveResult {
    double value = 0.0;
    double err_estimate = 0.0;
    bool converged = true;
    Method method = Method::SdpHalf;
};

/// r(x, t) = int_0^t r0(t - t') r(x, t') dt' for the chosen response kind.
/// The wavefront term of r_delta enters analytically as exp(-a x/2c) r0(t - x/c).
ConvolveResult convolve(const MediumParams& m, const InputPulse& pulse, ResponseKind kind,
                        double x, double t, const ConvolveOptions& opts = {});

}  // namespace kgd
