#pragma once

namespace kgd {

/// Crossover between the ascending series and the Hankel expansions.
inline constexpr double kBesselCrossover = 16.0;

// Bessel functions of the first kind and modified Bessel functions of orders
// 0 and 1 for real arguments. Accuracy target: 1e-12 absolute where the
// result is at most 1 in magnitude, 1e-12 relative elsewhere.
double bessel_j0(double z);
double bessel_j1(double z);
/// Throw Overflow once the result exceeds the double range (z > ~713).
double bessel_i0(double z);
double bessel_i1(double z);
/// exp(-|z|) I_nu(z); never overflow.
double bessel_i0_scaled(double z);
double bessel_i1_scaled(double z);

namespace detail {

enum class BesselKind { J, I };

/// Ascending series, summed in extended precision. For I the result is scaled
/// by exp(-z).
double bessel_series(BesselKind kind, int order, double z);
/// Large-argument expansion; for I the result is scaled by exp(-z).
double bessel_asymptotic(BesselKind kind, int order, double z);

/// max |series - asymptotic| over a few points around the crossover, for
/// J (absolute) and scaled I (relative).
double bessel_crossover_mismatch();

}  // namespace detail

}  // namespace kgd
