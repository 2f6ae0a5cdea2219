#include <doctest.h>

#include <cmath>

#include "kgd/exact.hpp"
#include "oracles/bessel_series.hpp"

using kgd::MediumParams;

TEST_CASE("outside the cone only the wavefront coefficient survives") {
    const MediumParams m(1, 0, 1);
    const auto r = kgd::exact_r_delta(m, 4, 3);
    CHECK(r.smooth_part == 0.0);
    CHECK(r.wavefront_coeff == doctest::Approx(std::exp(-2.0)));
    CHECK_FALSE(r.inside_cone);
    const auto n = kgd::exact_r_n(m, 4, 3);
    CHECK(n.smooth_part == 0.0);
    CHECK(n.wavefront_coeff == 0.0);
}

TEST_CASE("telegraph impulse response at x = 4, t = 8") {
    const MediumParams m(1, 0, 1);
    const auto r = kgd::exact_r_delta(m, 4, 8);
    // (x/c) sqrt(-delta) e^{-at/2} I1(sqrt(-delta) tau) / tau with tau = sqrt(48).
    const double want = 2 * std::exp(-4.0) * oracle::i1(std::sqrt(12.0)) / std::sqrt(48.0);
    CHECK(r.smooth_part == doctest::Approx(want).epsilon(1e-13));
    CHECK(r.inside_cone);
    CHECK(r.wavefront_coeff == doctest::Approx(std::exp(-2.0)));
}

TEST_CASE("removable limit at the wavefront") {
    for (const auto& m : {MediumParams(1, 0, 1), MediumParams(1, 1.25, 1)}) {
        const double x = 3.0;
        const double front = x / m.c();
        const double limit = -(x / m.c()) * m.delta() / 2 * std::exp(-m.a() * front / 2);
        CHECK(kgd::exact_r_delta(m, x, front).smooth_part == doctest::Approx(limit).epsilon(1e-14));
        CHECK(kgd::exact_r_delta(m, x, front * (1 + 1e-9)).smooth_part == doctest::Approx(limit).epsilon(1e-7));
        CHECK(kgd::exact_r_n(m, x, front).smooth_part == doctest::Approx(std::exp(-m.a() * x / (2 * m.c()))));
    }
}

TEST_CASE("second response special cases") {
    const MediumParams osc(1, 1.25, 1);
    for (const double t : {0.5, 3.0, 17.0}) {
        CHECK(kgd::exact_r_n(osc, 0, t).smooth_part ==
              doctest::Approx(std::exp(-t / 2) * oracle::j0(t)).epsilon(1e-12));
    }
    const double a = 0.7;
    const MediumParams tele(a, 0, 2);
    for (const double t : {1.0, 5.0, 20.0}) {
        const double x = 1.3;
        const double tau = std::sqrt(t * t - x * x / 4);
        CHECK(kgd::exact_r_n(tele, x, t).smooth_part ==
              doctest::Approx(std::exp(-a * t / 2) * oracle::i0(a / 2 * tau)).epsilon(1e-12));
    }
}

TEST_CASE("critical damping") {
    const MediumParams m(2, 1, 1);
    CHECK(kgd::exact_r_delta(m, 1, 3).smooth_part == 0.0);
    CHECK(kgd::exact_r_delta(m, 1, 3).wavefront_coeff == doctest::Approx(std::exp(-1.0)));
    CHECK(kgd::exact_r_n(m, 1, 3).smooth_part == doctest::Approx(std::exp(-3.0)));
}

TEST_CASE("r_delta is -c d/dx of r_n") {
    for (const auto& m : {MediumParams(1, 0, 1), MediumParams(1, 1.25, 1), MediumParams(2, 0.5, 1),
                          MediumParams(1e-4, 5, 2)}) {
        for (const double t : {2.0, 8.0}) {
            for (const double mu : {0.2, 0.5, 0.8}) {
                const double x = mu * m.c() * t;
                const double h = 1e-4 * x;
                const double d = -m.c() * (kgd::exact_r_n(m, x + h, t).smooth_part -
                                           kgd::exact_r_n(m, x - h, t).smooth_part) /
                                 (2 * h);
                const double want = kgd::exact_r_delta(m, x, t).smooth_part;
                CHECK(d == doctest::Approx(want).epsilon(1e-5));
            }
        }
    }
}
