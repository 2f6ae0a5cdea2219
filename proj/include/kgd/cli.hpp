#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kgd/inversion.hpp"

namespace kgd::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitBadConfig = 2,
    kExitNotConverged = 3,
};

/// Inclusive lo:hi:count grid.
struct Grid {
    double lo = 0.0;
    double hi = 0.0;
    int count = 0;

    std::vector<double> points() const;
};

/// Throws InvalidArgument for malformed text, count < 2 or lo >= hi.
Grid parse_grid(const std::string& text);

enum class Mode { SdpHalf, SdpFull, Exact, Talbot, Compare };

struct RunConfig {
    std::string command;
    double a = 0.0;
    double b = 0.0;
    double c = 1.0;
    ResponseKind kind = ResponseKind::Delta;
    Mode mode = Mode::SdpHalf;
    std::optional<double> t;
    std::optional<double> x;
    std::optional<Grid> x_grid;
    std::optional<Grid> t_grid;
    std::optional<double> mu;
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_intervals = 2000;
    double front_epsilon = kDefaultFrontEpsilon;
    int audit_points = 257;
    std::string pulse = "delta";
    std::string out = "-";
    int threads = 0;
};

/// (x, t) samples in sweep order. Grid points on the wavefront are pulled
/// inside the cone by front_epsilon; points beyond it are rejected.
std::vector<std::pair<double, double>> sweep_points(const RunConfig& cfg);

/// Loads a two-column time,value pulse table; '#' comments and one
/// non-numeric header line are skipped. Throws UnsupportedPulse.
TabulatedPulse read_pulse_file(const std::string& path);

/// Full command-line entry point. Output files go to --out (stdout for "-"),
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kgd::cli
