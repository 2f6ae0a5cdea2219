#include "kgd/inversion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "kgd/error.hpp"
#include "kgd/exact.hpp"

namespace kgd {

std::string_view to_string(Method m) {
    switch (m) {
        case Method::SdpFull: return "SdpFull";
        case Method::SdpHalf: return "SdpHalf";
        case Method::Exact: return "Exact";
        case Method::Talbot: return "Talbot";
        case Method::Degenerate: return "Degenerate";
    }
    return "Unknown";
}

namespace {

const Complex kTwoPiI(0.0, 2.0 * std::numbers::pi);
constexpr double kMuGrain = 1e-12;
// Below this the saddles sit within ~mu^2 of the branch points and the path
// integral loses digits to cancellation. Treated like the x = 0 limit.
constexpr double kSmallMu = 1e-3;

void check_point(double x, double t) {
    if (!(x >= 0.0) || !(t > 0.0) || !std::isfinite(x) || !std::isfinite(t)) {
        throw Error(ErrorCode::InvalidArgument, "response needs finite x >= 0 and t > 0");
    }
}

double wavefront_coefficient(const MediumParams& m, ResponseKind kind, double x) {
    return kind == ResponseKind::Delta ? std::exp(-0.5 * m.a() * x / m.c()) : 0.0;
}

}  // namespace

Complex integrand_delta(const MediumParams& m, double x, double t, Complex s, CutLayout cut) {
    const Complex w = branch_sqrt(m, s, cut);
    return std::exp(s * t - (x / m.c()) * w) / kTwoPiI;
}

Complex integrand_n(const MediumParams& m, double x, double t, Complex s, CutLayout cut) {
    const Complex w = branch_sqrt(m, s, cut);
    return std::exp(s * t - (x / m.c()) * w) / (kTwoPiI * w);
}

std::shared_ptr<const SdpPath> PathCache::get(const MediumParams& m, double mu,
                                              const PathOptions& opts) {
    const long long key = std::llround(mu / kMuGrain);
    {
        std::lock_guard lock(mutex_);
        if (auto it = paths_.find(key); it != paths_.end()) return it->second;
    }
    // Build on the grid value so the cached geometry does not depend on which
    // caller got there first.
    const double grid_mu = std::min(static_cast<double>(key) * kMuGrain,
                                    std::nextafter(1.0 - opts.front_epsilon, 0.0));
    auto path = std::make_shared<const SdpPath>(build_path(m, grid_mu, opts));
    std::lock_guard lock(mutex_);
    return paths_.try_emplace(key, std::move(path)).first->second;
}

std::size_t PathCache::size() const {
    std::lock_guard lock(mutex_);
    return paths_.size();
}

ResponseSample response_on_path(const SdpPath& path, ResponseKind kind, double x, double t,
                                const QuadratureSettings& settings, bool use_half) {
    const MediumParams& m = path.medium();
    const CutLayout cut = path.cut();
    const PointIntegrand g = [&](Complex s) {
        return kind == ResponseKind::Delta ? integrand_delta(m, x, t, s, cut)
                                           : integrand_n(m, x, t, s, cut);
    };

    ResponseSample out;
    out.x = x;
    out.t = t;
    out.wavefront_coeff = wavefront_coefficient(m, kind, x);
    if (use_half) {
        const QuadResult r = integrate_path(path, path.half_intervals(t), g, settings);
        out.value = 2.0 * r.value.real();
        out.err_estimate = 2.0 * r.err_estimate;
        out.imag_residual = 0.0;
        out.method = Method::SdpHalf;
        out.converged = r.converged;
    } else {
        const QuadResult r = integrate_path(path, path.intervals(t), g, settings);
        out.value = r.value.real();
        out.err_estimate = r.err_estimate;
        out.imag_residual = std::abs(r.value.imag());
        out.method = Method::SdpFull;
        out.converged = r.converged;
    }
    return out;
}

ResponseSample response_exact(const MediumParams& m, ResponseKind kind, double x, double t) {
    const ExactResponse e = kind == ResponseKind::Delta ? exact_r_delta(m, x, t)
                                                        : exact_r_n(m, x, t);
    ResponseSample out;
    out.x = x;
    out.t = t;
    out.value = e.smooth_part;
    out.method = Method::Exact;
    out.wavefront_coeff = e.wavefront_coeff;
    return out;
}

ResponseSample response_sdp(const MediumParams& m, ResponseKind kind, double x, double t,
                            const SolverOptions& opts, PathCache* cache) {
    check_point(x, t);
    const double mu = x / (m.c() * t);
    if (!(mu < 1.0 - opts.front_epsilon)) {
        std::ostringstream os;
        os.precision(17);
        os << "x/(c t) = " << mu << " is within " << opts.front_epsilon << " of the wavefront";
        throw Error(ErrorCode::FrontTooClose, os.str());
    }

    if (m.regime() == Regime::ZeroDelta || x == 0.0 || mu < kSmallMu) {
        // No usable saddle geometry: the path collapses onto the cut.
        ResponseSample out = response_exact(m, kind, x, t);
        out.method = (x == 0.0 && kind == ResponseKind::N && m.regime() != Regime::ZeroDelta)
                         ? Method::Exact
                         : Method::Degenerate;
        return out;
    }

    const PathOptions popts{opts.front_epsilon, opts.audit_points};
    if (cache != nullptr) {
        const auto path = cache->get(m, mu, popts);
        return response_on_path(*path, kind, x, t, opts.quadrature, opts.use_half);
    }
    const SdpPath path = build_path(m, mu, popts);
    return response_on_path(path, kind, x, t, opts.quadrature, opts.use_half);
}

void validate_pulse(const InputPulse& pulse) {
    if (const auto* tab = std::get_if<TabulatedPulse>(&pulse)) {
        if (tab->times.size() < 2 || tab->times.size() != tab->values.size()) {
            throw Error(ErrorCode::UnsupportedPulse,
                        "tabulated pulse needs at least two (time, value) pairs");
        }
        for (std::size_t i = 0; i < tab->times.size(); ++i) {
            if (!std::isfinite(tab->times[i]) || !std::isfinite(tab->values[i])) {
                throw Error(ErrorCode::UnsupportedPulse, "tabulated pulse has non-finite entries");
            }
            if (i > 0 && !(tab->times[i] > tab->times[i - 1])) {
                throw Error(ErrorCode::UnsupportedPulse,
                            "tabulated pulse times must be strictly increasing");
            }
        }
        if (tab->times.front() < 0.0) {
            throw Error(ErrorCode::UnsupportedPulse, "pulse must be supported on t >= 0");
        }
    } else if (const auto* fn = std::get_if<CallablePulse>(&pulse)) {
        if (!fn->fn) throw Error(ErrorCode::UnsupportedPulse, "callable pulse is empty");
    }
}

double pulse_value(const InputPulse& pulse, double t) {
    return std::visit(
        [t](const auto& p) -> double {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, DiracDelta>) {
                return 0.0;
            } else if constexpr (std::is_same_v<P, UnitStep>) {
                return t >= 0.0 ? 1.0 : 0.0;
            } else if constexpr (std::is_same_v<P, TabulatedPulse>) {
                if (t < p.times.front() || t > p.times.back()) return 0.0;
                const auto it = std::upper_bound(p.times.begin(), p.times.end(), t);
                if (it == p.times.end()) return p.values.back();
                const auto i = static_cast<std::size_t>(it - p.times.begin());
                const double w = (t - p.times[i - 1]) / (p.times[i] - p.times[i - 1]);
                return (1.0 - w) * p.values[i - 1] + w * p.values[i];
            } else {
                return t >= 0.0 ? p.fn(t) : 0.0;
            }
        },
        pulse);
}

ConvolveResult convolve(const MediumParams& m, const InputPulse& pulse, ResponseKind kind,
                        double x, double t, const ConvolveOptions& opts) {
    check_point(x, t);
    validate_pulse(pulse);
    ConvolveResult out;
    out.method = opts.use_exact_response
                     ? Method::Exact
                     : (opts.response.use_half ? Method::SdpHalf : Method::SdpFull);

    const double front = x / m.c();
    // Closest arrival time the path integral can handle.
    double usable = x == 0.0 ? 0.0 : front / (1.0 - opts.response.front_epsilon);
    while (x > 0.0 && !(x / (m.c() * usable) < 1.0 - opts.response.front_epsilon)) {
        usable = std::nextafter(usable, INFINITY);
    }

    auto response = [&](double tp) -> double {
        if (opts.use_exact_response) return response_exact(m, kind, x, tp).value;
        const ResponseSample s = response_sdp(m, kind, x, std::max(tp, usable), opts.response);
        out.converged = out.converged && s.converged;
        return s.value;
    };

    if (std::holds_alternative<DiracDelta>(pulse)) {
        if (t < front) return out;
        if (!opts.use_exact_response && t < usable) {
            out.value = response(usable);
            return out;
        }
        out.value = response(t);
        return out;
    }

    if (t < front) return out;
    double total = wavefront_coefficient(m, kind, x) * pulse_value(pulse, t - front);
    double err = 0.0;

    double lo = front;
    if (!opts.use_exact_response && usable > front) {
        // Sliver between the front and the first usable time: one-point rule.
        const double hi = std::min(usable, t);
        total += (hi - front) * pulse_value(pulse, t - 0.5 * (front + hi)) * response(usable);
        lo = hi;
    }

    if (lo < t) {
        std::vector<double> cuts{lo, t};
        auto add_cut = [&](double tau) {
            const double tp = t - tau;
            if (tp > lo && tp < t) cuts.push_back(tp);
        };
        if (const auto* tab = std::get_if<TabulatedPulse>(&pulse)) {
            for (double tau : tab->times) add_cut(tau);
        } else if (const auto* fn = std::get_if<CallablePulse>(&pulse)) {
            for (double tau : fn->breakpoints) add_cut(tau);
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

        const RealIntegrand f = [&](double tp) {
            return Complex(pulse_value(pulse, t - tp) * response(tp), 0.0);
        };
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            const QuadResult r = integrate(f, cuts[i], cuts[i + 1], opts.outer);
            total += r.value.real();
            err += r.err_estimate;
            out.converged = out.converged && r.converged;
        }
    }
    out.value = total;
    out.err_estimate = err;
    return out;
}

}  // namespace kgd
