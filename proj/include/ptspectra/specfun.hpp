#pragma once

#include "ptspectra/core.hpp"

namespace ptspectra {

/// Approach to the negative real axis: -g + i0 (above) or -g - i0 (below).
enum class BranchSide { Above, Below };

/// Gamma function for x > 0 (Lanczos, g = 7).
double gamma_fn(double x);

/// Modified Bessel function of the first kind, |nu| < 2, 0 < x < 700.
/// Power series up to x = 30, Hankel asymptotic expansion beyond.
double bessel_i(double nu, double x);

/// e^{-x} I_nu(x), usable for any x > 0.
double bessel_i_scaled(double nu, double x);

/// Modified Bessel function of the second kind for noninteger nu.
/// x <= 2 uses (pi/2)(I_{-nu} - I_nu)/sin(nu pi); larger x uses Steed's
/// continued fraction, since the difference of the I's cancels there.
double bessel_k(double nu, double x);

/// e^{x} K_nu(x).
double bessel_k_scaled(double nu, double x);

/// Confluent hypergeometric 1F1(a; b; z) for real arguments. Negative z goes
/// through 1F1(a; b; z) = e^z 1F1(b - a; b; -z).
double kummer_1f1(double a, double b, double z);

/// (-g +- i0)^p = g^p e^{+- i pi p}.
cplx branch_power(double g, double p, BranchSide side);

} // namespace ptspectra
