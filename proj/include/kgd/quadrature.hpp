#pragma once

#include <functional>

#include "kgd/medium.hpp"
#include "kgd/sdp_geometry.hpp"

namespace kgd {

enum class GaussKronrodRule {
    G7K15,
    G10K21,
};

struct QuadratureSettings {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_intervals = 2000;
    GaussKronrodRule rule = GaussKronrodRule::G7K15;

    /// Throws InvalidArgument on abs_tol <= 0, rel_tol < 0 or max_intervals < 1.
    void validate() const;
};

struct QuadResult {
    Complex value;
    double err_estimate = 0.0;
    int intervals_used = 0;
    bool converged = false;
};

using RealIntegrand = std::function<Complex(double)>;
using PointIntegrand = std::function<Complex(Complex)>;

/// Adaptive Gauss-Kronrod integration of a complex integrand over [lo, hi].
///
/// Real and imaginary parts share one subdivision tree; an interval's error is
/// the Euclidean norm of the Gauss/Kronrod differences of both parts, floored
/// at the round-off level of the Kronrod sum of |f|. The interval with the
/// largest error is bisected until the total error meets
/// max(abs_tol, rel_tol |value|) or max_intervals is reached, in which case
/// the best value comes back with converged = false.
///
/// Throws NonFiniteIntegrand (naming the abscissa) if f returns NaN or Inf.
QuadResult integrate(const RealIntegrand& f, double lo, double hi,
                     const QuadratureSettings& settings = {});

/// Sum of integrate() over parameter intervals of a path: the integrand seen
/// by the quadrature is g(s(u)) s'(u).
QuadResult integrate_path(const SdpPath& path, const std::vector<ParamInterval>& intervals,
                          const PointIntegrand& g, const QuadratureSettings& settings = {});

/// Whole-path convenience overload (open branches clipped only at the
/// minimal end gap).
QuadResult integrate_path(const SdpPath& path, const PointIntegrand& g,
                          const QuadratureSettings& settings = {});

/// Integrates Legendre polynomials with both rules and reports the largest
/// deviation from the exact integrals over the degrees each rule must
/// reproduce. Used by the CLI self-test.
double gauss_kronrod_self_check();

}  // namespace kgd
