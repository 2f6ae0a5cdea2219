#include "kgd/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "kgd/bessel.hpp"
#include "kgd/csv.hpp"
#include "kgd/error.hpp"
#include "kgd/quadrature.hpp"
#include "kgd/talbot.hpp"

namespace kgd::cli {

namespace {

using csv::format_number;

std::string mode_name(Mode m) {
    switch (m) {
        case Mode::SdpHalf: return "sdp-half";
        case Mode::SdpFull: return "sdp-full";
        case Mode::Exact: return "exact";
        case Mode::Talbot: return "talbot";
        case Mode::Compare: return "compare";
    }
    return "?";
}

Mode parse_mode(const std::string& s) {
    if (s == "sdp-half") return Mode::SdpHalf;
    if (s == "sdp-full") return Mode::SdpFull;
    if (s == "exact") return Mode::Exact;
    if (s == "talbot") return Mode::Talbot;
    if (s == "compare") return Mode::Compare;
    throw Error(ErrorCode::InvalidArgument, "unknown mode '" + s + "'");
}

ResponseKind parse_kind(const std::string& s) {
    if (s == "delta") return ResponseKind::Delta;
    if (s == "n") return ResponseKind::N;
    throw Error(ErrorCode::InvalidArgument, "unknown kind '" + s + "' (expected delta or n)");
}

std::string_view regime_name(Regime r) {
    switch (r) {
        case Regime::NegativeDelta: return "negative-delta";
        case Regime::PositiveDelta: return "positive-delta";
        case Regime::ZeroDelta: return "zero-delta";
    }
    return "?";
}

std::string grid_text(const Grid& g) {
    return format_number(g.lo) + ":" + format_number(g.hi) + ":" + std::to_string(g.count);
}

// Largest x below c t (1 - eps) whose mu passes the strict front check.
double pull_x_inside(double c, double t, double eps) {
    double x = (1.0 - eps) * c * t;
    while (!(x / (c * t) < 1.0 - eps)) x = std::nextafter(x, 0.0);
    return x;
}

double pull_t_inside(double x, double c, double eps) {
    double t = x / (c * (1.0 - eps));
    while (!(x / (c * t) < 1.0 - eps)) t = std::nextafter(t, INFINITY);
    return t;
}

std::pair<double, double> admit(const RunConfig& cfg, double x, double t, bool sweep_x) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw Error(ErrorCode::InvalidArgument, "t must be positive, got " + format_number(t));
    }
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw Error(ErrorCode::InvalidArgument, "x must be non-negative, got " + format_number(x));
    }
    const double front = cfg.c * t;
    if (x > front * (1.0 + 1e-12)) {
        throw Error(ErrorCode::InvalidArgument, "x = " + format_number(x) + " lies ahead of the wavefront x = c t = " +
                                                    format_number(front));
    }
    if (!(x / front < 1.0 - cfg.front_epsilon)) {
        if (sweep_x) return {pull_x_inside(cfg.c, t, cfg.front_epsilon), t};
        return {x, pull_t_inside(x, cfg.c, cfg.front_epsilon)};
    }
    return {x, t};
}

template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    std::size_t workers = threads > 0 ? static_cast<std::size_t>(threads)
                                      : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, n);
    std::atomic<std::size_t> next{0};
    auto loop = [&] {
        for (std::size_t i = next++; i < n; i = next++) fn(i);
    };
    if (workers <= 1) {
        loop();
        return;
    }
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(loop);
}

QuadratureSettings quadrature_of(const RunConfig& cfg) {
    QuadratureSettings q;
    q.abs_tol = cfg.abs_tol;
    q.rel_tol = cfg.rel_tol;
    q.max_intervals = cfg.max_intervals;
    q.validate();
    return q;
}

SolverOptions solver_of(const RunConfig& cfg) {
    SolverOptions so;
    so.quadrature = quadrature_of(cfg);
    so.use_half = cfg.mode != Mode::SdpFull;
    so.front_epsilon = cfg.front_epsilon;
    so.audit_points = cfg.audit_points;
    return so;
}

csv::Line comment(const std::string& text) {
    csv::Line l;
    l.kind = csv::Line::Kind::Comment;
    l.comment = " " + text;
    return l;
}

csv::Line blank() {
    csv::Line l;
    l.kind = csv::Line::Kind::Blank;
    return l;
}

csv::Line record(std::vector<csv::Field> fields) {
    csv::Line l;
    l.fields = std::move(fields);
    return l;
}

csv::Line header(std::initializer_list<const char*> names) {
    std::vector<csv::Field> f;
    for (const char* n : names) f.emplace_back(std::string(n));
    return record(std::move(f));
}

void echo_config(csv::Document& doc, const RunConfig& cfg, const MediumParams& m) {
    doc.lines.push_back(comment("kgdsdp " + cfg.command));
    doc.lines.push_back(comment("a = " + format_number(cfg.a)));
    doc.lines.push_back(comment("b = " + format_number(cfg.b)));
    doc.lines.push_back(comment("c = " + format_number(cfg.c)));
    doc.lines.push_back(comment("delta = " + format_number(m.delta())));
    doc.lines.push_back(comment("regime = " + std::string(regime_name(m.regime()))));
    if (cfg.command != "path") {
        doc.lines.push_back(comment(std::string("kind = ") + (cfg.kind == ResponseKind::Delta ? "delta" : "n")));
        doc.lines.push_back(comment("mode = " + mode_name(cfg.mode)));
    }
    if (cfg.mu) doc.lines.push_back(comment("mu = " + format_number(*cfg.mu)));
    if (cfg.t) doc.lines.push_back(comment("t = " + format_number(*cfg.t)));
    if (cfg.x) doc.lines.push_back(comment("x = " + format_number(*cfg.x)));
    if (cfg.x_grid) doc.lines.push_back(comment("x_grid = " + grid_text(*cfg.x_grid)));
    if (cfg.t_grid) doc.lines.push_back(comment("t_grid = " + grid_text(*cfg.t_grid)));
    if (cfg.command == "convolve") doc.lines.push_back(comment("pulse = " + cfg.pulse));
    doc.lines.push_back(comment("abs_tol = " + format_number(cfg.abs_tol)));
    doc.lines.push_back(comment("rel_tol = " + format_number(cfg.rel_tol)));
    doc.lines.push_back(comment("max_intervals = " + std::to_string(cfg.max_intervals)));
    doc.lines.push_back(comment("front_epsilon = " + format_number(cfg.front_epsilon)));
    doc.lines.push_back(comment("audit_points = " + std::to_string(cfg.audit_points)));
    if (cfg.command != "path" && cfg.kind == ResponseKind::Delta) {
        doc.lines.push_back(comment("value is the smooth part; add exp(-a x/(2c)) delta(t - x/c) for the wavefront"));
    }
}

struct Row {
    ResponseSample sample;
    double exact = 0.0;
    bool ok = false;
    std::string error;
};

int emit(const csv::Document& doc, const RunConfig& cfg, std::ostream& out) {
    if (cfg.out == "-") {
        csv::write(out, doc);
        out.flush();
        return out ? kExitOk : kExitFailure;
    }
    std::ofstream f(cfg.out, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open '" + cfg.out + "' for writing");
    csv::write(f, doc);
    f.close();
    if (!f) throw std::runtime_error("failed writing '" + cfg.out + "'");
    return kExitOk;
}

int finish_sweep(csv::Document& doc, const std::vector<Row>& rows, const RunConfig& cfg,
                 std::ostream& out, std::ostream& err) {
    const bool compare = cfg.mode == Mode::Compare;
    std::size_t failures = 0;
    for (const Row& r : rows) {
        if (!r.ok) {
            ++failures;
            continue;
        }
        const ResponseSample& s = r.sample;
        std::vector<csv::Field> f{s.x, s.t, s.value, s.err_estimate, s.imag_residual,
                                  std::string(to_string(s.method))};
        if (compare) {
            f.emplace_back(r.exact);
            f.emplace_back(std::abs(s.value - r.exact));
        }
        doc.lines.push_back(record(std::move(f)));
    }
    if (failures > 0) {
        doc.lines.push_back(comment("failed samples = " + std::to_string(failures)));
        for (const Row& r : rows) {
            if (r.ok) continue;
            doc.lines.push_back(comment("x = " + format_number(r.sample.x) + ", t = " + format_number(r.sample.t) +
                                        ": " + r.error));
        }
        err << "kgdsdp: " << failures << " of " << rows.size() << " samples did not converge\n";
    }
    const int code = emit(doc, cfg, out);
    return failures > 0 ? kExitNotConverged : code;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const MediumParams m(cfg.a, cfg.b, cfg.c);
    const auto pts = sweep_points(cfg);
    const SolverOptions so = solver_of(cfg);
    PathCache cache;
    std::vector<Row> rows(pts.size());

    parallel_for(pts.size(), cfg.threads, [&](std::size_t i) {
        const auto [x, t] = pts[i];
        Row& row = rows[i];
        row.sample.x = x;
        row.sample.t = t;
        try {
            switch (cfg.mode) {
                case Mode::Exact:
                    row.sample = response_exact(m, cfg.kind, x, t);
                    break;
                case Mode::Talbot: {
                    const ResponseSample e = response_exact(m, cfg.kind, x, t);
                    row.sample = e;
                    row.sample.value = talbot_response(m, cfg.kind, x, t);
                    row.sample.method = Method::Talbot;
                    break;
                }
                case Mode::Compare:
                    row.exact = response_exact(m, cfg.kind, x, t).value;
                    [[fallthrough]];
                case Mode::SdpHalf:
                case Mode::SdpFull:
                    row.sample = response_sdp(m, cfg.kind, x, t, so, &cache);
                    break;
            }
            row.ok = row.sample.converged;
            if (!row.ok) row.error = "quadrature did not converge";
        } catch (const std::exception& e) {
            row.error = e.what();
        }
    });

    csv::Document doc;
    echo_config(doc, cfg, m);
    if (cfg.mode == Mode::Compare) {
        doc.lines.push_back(header({"x", "t", "value", "err_estimate", "imag_residual", "method", "exact", "abs_diff"}));
    } else {
        doc.lines.push_back(header({"x", "t", "value", "err_estimate", "imag_residual", "method"}));
    }
    return finish_sweep(doc, rows, cfg, out, err);
}

InputPulse pulse_of(const RunConfig& cfg) {
    if (cfg.pulse == "delta") return DiracDelta{};
    if (cfg.pulse == "step") return UnitStep{};
    return read_pulse_file(cfg.pulse);
}

int cmd_convolve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.mode == Mode::Talbot || cfg.mode == Mode::Compare) {
        throw Error(ErrorCode::InvalidArgument, "convolve supports modes sdp-half, sdp-full and exact");
    }
    const MediumParams m(cfg.a, cfg.b, cfg.c);
    const InputPulse pulse = pulse_of(cfg);
    const auto pts = sweep_points(cfg);
    ConvolveOptions co;
    co.response = solver_of(cfg);
    co.use_exact_response = cfg.mode == Mode::Exact;
    std::vector<Row> rows(pts.size());

    parallel_for(pts.size(), cfg.threads, [&](std::size_t i) {
        const auto [x, t] = pts[i];
        Row& row = rows[i];
        row.sample.x = x;
        row.sample.t = t;
        try {
            const ConvolveResult r = convolve(m, pulse, cfg.kind, x, t, co);
            row.sample.value = r.value;
            row.sample.err_estimate = r.err_estimate;
            row.sample.method = r.method;
            row.sample.converged = r.converged;
            row.ok = r.converged;
            if (!row.ok) row.error = "quadrature did not converge";
        } catch (const std::exception& e) {
            row.error = e.what();
        }
    });

    csv::Document doc;
    echo_config(doc, cfg, m);
    doc.lines.push_back(header({"x", "t", "value", "err_estimate", "imag_residual", "method"}));
    return finish_sweep(doc, rows, cfg, out, err);
}

int cmd_path(RunConfig cfg, std::ostream& out) {
    const MediumParams m(cfg.a, cfg.b, cfg.c);
    if (!cfg.mu) {
        if (!cfg.x || !cfg.t) throw Error(ErrorCode::InvalidArgument, "path needs --mu or both --x and --t");
        cfg.mu = *cfg.x / (cfg.c * *cfg.t);
    }
    const double mu = *cfg.mu;
    if (!(mu > 0.0)) throw Error(ErrorCode::OutOfRange, "path needs mu > 0");
    const SdpPath path = build_path(m, mu, PathOptions{cfg.front_epsilon, cfg.audit_points});

    csv::Document doc;
    echo_config(doc, cfg, m);
    doc.lines.push_back(header({"u", "re_s", "im_s", "re_F", "im_F"}));
    for (const AuditRow& r : path.audit().rows) {
        doc.lines.push_back(record({r.u, r.s.real(), r.s.imag(), r.F.real(), r.F.imag()}));
    }
    doc.lines.push_back(blank());
    doc.lines.push_back(header({"key", "value"}));
    auto kv = [&](const char* key, csv::Field v) { doc.lines.push_back(record({std::string(key), std::move(v)})); };
    kv("shape", std::string(path.closed() ? "ellipse" : "open-pair"));
    kv("mu", mu);
    if (path.closed()) {
        kv("center", path.ellipse().center);
        kv("alpha", path.ellipse().alpha);
        kv("beta", path.ellipse().beta);
    } else {
        const OpenPairGeometry& g = path.open_pair();
        kv("center", g.upper.center);
        kv("u_minus", g.u_minus);
        kv("u_plus", g.u_plus);
        kv("u_saddle", g.upper.u_saddle);
    }
    const SaddleData& sd = path.saddles();
    kv("p1_re", sd.p1.real());
    kv("p1_im", sd.p1.imag());
    kv("p2_re", sd.p2.real());
    kv("p2_im", sd.p2.imag());
    kv("phi1_re", sd.phi1.real());
    kv("phi2_re", sd.phi2.real());
    kv("omega1", sd.omega1);
    kv("omega2", sd.omega2);
    kv("b1_re", path.b1().real());
    kv("b1_im", path.b1().imag());
    kv("b2_re", path.b2().real());
    kv("b2_im", path.b2().imag());
    kv("max_level_residual", path.audit().max_level_residual);
    kv("saddle_residual_1", path.audit().saddle_residual[0]);
    kv("saddle_residual_2", path.audit().saddle_residual[1]);
    kv("descent_ok", path.audit().descent_ok ? 1.0 : 0.0);
    return emit(doc, cfg, out);
}

struct Check {
    std::string name;
    double value;
    double limit;
};

int cmd_selftest(const RunConfig& cfg, std::ostream& out) {
    std::vector<Check> checks;
    checks.push_back({"gauss_kronrod_legendre", gauss_kronrod_self_check(), 1e-13});
    checks.push_back({"bessel_crossover", detail::bessel_crossover_mismatch(), 1e-12});
    checks.push_back({"bessel_j0_first_zero", std::abs(bessel_j0(2.404825557695773)), 1e-12});
    for (const auto& [a, b] : {std::pair{1.0, 0.0}, std::pair{1.0, 1.25}}) {
        const MediumParams m(a, b, 1.0);
        const double s = 1e6;
        const double w = branch_sqrt(m, s).real();
        checks.push_back({"branch_asymptotic_b" + format_number(b), std::abs(w - (s + 0.5 * a)) / s, 1e-6});
    }
    {
        const MediumParams m(1.0, 0.0, 1.0);
        const double d = std::abs(response_sdp(m, ResponseKind::Delta, 4.0, 8.0).value -
                                  response_exact(m, ResponseKind::Delta, 4.0, 8.0).value);
        checks.push_back({"sdp_vs_exact_negative_delta", d, 1e-8});
    }
    {
        const MediumParams m(1.0, 1.25, 1.0);
        const double d = std::abs(response_sdp(m, ResponseKind::N, 16.0, 64.0).value -
                                  response_exact(m, ResponseKind::N, 16.0, 64.0).value);
        checks.push_back({"sdp_vs_exact_positive_delta", d, 1e-8});
    }

    csv::Document doc;
    doc.lines.push_back(comment("kgdsdp selftest"));
    doc.lines.push_back(header({"check", "value", "limit", "status"}));
    bool all = true;
    for (const Check& c : checks) {
        const bool pass = c.value <= c.limit;
        all = all && pass;
        doc.lines.push_back(record({c.name, c.value, c.limit, std::string(pass ? "PASS" : "FAIL")}));
    }
    emit(doc, cfg, out);
    return all ? kExitOk : kExitFailure;
}

}  // namespace

std::vector<double> Grid::points() const {
    std::vector<double> p(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) p[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
    p.back() = hi;
    return p;
}

Grid parse_grid(const std::string& text) {
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
    if (c2 == std::string::npos || text.find(':', c2 + 1) != std::string::npos) {
        throw Error(ErrorCode::InvalidArgument, "grid '" + text + "' is not lo:hi:count");
    }
    Grid g;
    g.lo = csv::parse_number(text.substr(0, c1));
    g.hi = csv::parse_number(text.substr(c1 + 1, c2 - c1 - 1));
    const std::string count = text.substr(c2 + 1);
    std::size_t used = 0;
    try {
        g.count = std::stoi(count, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != count.size()) {
        throw Error(ErrorCode::InvalidArgument, "grid count '" + count + "' is not an integer");
    }
    if (g.count < 2) throw Error(ErrorCode::InvalidArgument, "grid needs at least 2 points");
    if (!(g.lo < g.hi)) throw Error(ErrorCode::InvalidArgument, "grid needs lo < hi");
    return g;
}

std::vector<std::pair<double, double>> sweep_points(const RunConfig& cfg) {
    std::vector<std::pair<double, double>> pts;
    if (cfg.x_grid && cfg.t && !cfg.x && !cfg.t_grid) {
        for (double x : cfg.x_grid->points()) pts.push_back(admit(cfg, x, *cfg.t, true));
    } else if (cfg.t_grid && cfg.x && !cfg.t && !cfg.x_grid) {
        for (double t : cfg.t_grid->points()) pts.push_back(admit(cfg, *cfg.x, t, false));
    } else if (cfg.x && cfg.t && !cfg.x_grid && !cfg.t_grid) {
        pts.push_back(admit(cfg, *cfg.x, *cfg.t, true));
    } else {
        throw Error(ErrorCode::InvalidArgument,
                    "give --t with --x-grid, --x with --t-grid, or --t with --x");
    }
    return pts;
}

TabulatedPulse read_pulse_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(ErrorCode::UnsupportedPulse, "cannot read pulse file '" + path + "'");
    TabulatedPulse p;
    std::string line;
    bool first = true;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const auto comma = line.find(',');
        double tv = 0.0;
        double vv = 0.0;
        try {
            if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
                throw Error(ErrorCode::UnsupportedPulse, "expected two columns");
            }
            tv = csv::parse_number(line.substr(0, comma));
            vv = csv::parse_number(line.substr(comma + 1));
        } catch (const Error&) {
            if (first) {
                first = false;
                continue;  // header
            }
            throw Error(ErrorCode::UnsupportedPulse,
                        path + ":" + std::to_string(lineno) + ": expected time,value");
        }
        first = false;
        p.times.push_back(tv);
        p.values.push_back(vv);
    }
    validate_pulse(p);
    return p;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Transient responses of the damped Klein-Gordon equation by steepest descent"};
    app.name("kgdsdp");
    app.set_config("--config", "", "Read options from an INI or TOML file");
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::string a = "0", b = "0", c = "1", kind = "delta", mode = "sdp-half";
    std::string t, x, x_grid, t_grid, mu;
    RunConfig cfg;
    app.add_option("--a", a, "Damping coefficient (fractions like 5/4 allowed)")->capture_default_str();
    app.add_option("--b", b, "Restoring coefficient")->capture_default_str();
    app.add_option("--c", c, "Wavefront speed")->capture_default_str();
    app.add_option("--kind", kind, "Response: delta or n")->capture_default_str();
    app.add_option("--mode", mode, "sdp-half, sdp-full, exact, talbot or compare")->capture_default_str();
    app.add_option("--t", t, "Fixed time");
    app.add_option("--x", x, "Fixed position");
    app.add_option("--x-grid", x_grid, "Positions lo:hi:count at fixed --t");
    app.add_option("--t-grid", t_grid, "Times lo:hi:count at fixed --x");
    app.add_option("--mu", mu, "Similarity parameter x/(c t) for the path command");
    app.add_option("--abs-tol", cfg.abs_tol, "Absolute quadrature tolerance")->capture_default_str();
    app.add_option("--rel-tol", cfg.rel_tol, "Relative quadrature tolerance")->capture_default_str();
    app.add_option("--max-intervals", cfg.max_intervals, "Subdivision cap")->capture_default_str();
    app.add_option("--front-epsilon", cfg.front_epsilon, "Closest approach to the wavefront")
        ->capture_default_str();
    app.add_option("--audit-points", cfg.audit_points, "Path audit grid size")->capture_default_str();
    app.add_option("--pulse", cfg.pulse, "delta, step, or a time,value CSV file")->capture_default_str();
    app.add_option("--out", cfg.out, "Output file ('-' for stdout)")->capture_default_str();
    app.add_option("--threads", cfg.threads, "Worker threads (0: all cores)")->capture_default_str();

    app.add_subcommand("solve", "Response values over a sweep");
    app.add_subcommand("path", "Dump the steepest descent path at one mu");
    app.add_subcommand("convolve", "Response to an input pulse over a sweep");
    app.add_subcommand("selftest", "Run the embedded numerical self-checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitBadConfig;
    }

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        cfg.a = csv::parse_number(a);
        cfg.b = csv::parse_number(b);
        cfg.c = csv::parse_number(c);
        cfg.kind = parse_kind(kind);
        cfg.mode = parse_mode(mode);
        if (!t.empty()) cfg.t = csv::parse_number(t);
        if (!x.empty()) cfg.x = csv::parse_number(x);
        if (!mu.empty()) cfg.mu = csv::parse_number(mu);
        if (!x_grid.empty()) cfg.x_grid = parse_grid(x_grid);
        if (!t_grid.empty()) cfg.t_grid = parse_grid(t_grid);
        if (!(cfg.front_epsilon > 0.0 && cfg.front_epsilon < 1.0)) {
            throw Error(ErrorCode::InvalidArgument, "front epsilon must lie in (0, 1)");
        }
        if (cfg.audit_points < 3) throw Error(ErrorCode::InvalidArgument, "audit grid needs >= 3 points");
        quadrature_of(cfg);

        if (cfg.command == "solve") return cmd_solve(cfg, out, err);
        if (cfg.command == "convolve") return cmd_convolve(cfg, out, err);
        if (cfg.command == "path") return cmd_path(cfg, out);
        return cmd_selftest(cfg, out);
    } catch (const Error& e) {
        err << "kgdsdp: " << e.what() << '\n';
        switch (e.code()) {
            case ErrorCode::NotConverged:
                return kExitNotConverged;
            case ErrorCode::InvalidArgument:
            case ErrorCode::OutOfRange:
            case ErrorCode::FrontTooClose:
            case ErrorCode::DegenerateRegime:
            case ErrorCode::WrongRegime:
            case ErrorCode::UnsupportedPulse:
            case ErrorCode::OriginPole:
            case ErrorCode::BranchPointHit:
                return kExitBadConfig;
            default:
                return kExitFailure;
        }
    } catch (const std::exception& e) {
        err << "kgdsdp: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace kgd::cli
