#include "ptspectra/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "ptspectra/errors.hpp"

namespace ptspectra {

using std::numbers::pi;

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

double lanczos_gamma(double x) {
    // x >= 0.5
    const double z = x - 1.0;
    double sum = kLanczos[0];
    for (std::size_t k = 1; k < kLanczos.size(); ++k) sum += kLanczos[k] / (z + static_cast<double>(k));
    const double t = z + kLanczosG + 0.5;
    const double half = std::pow(t, 0.5 * (z + 0.5));
    return std::sqrt(2.0 * pi) * half * (std::exp(-t) * half) * sum;
}

bool near_integer(double nu) {
    return std::abs(nu - std::round(nu)) < 1e-8;
}

// 1/Gamma(z) for any real z, zero at the poles
double recip_gamma(double z) {
    if (z > 0.0) return 1.0 / gamma_fn(z);
    if (z == std::round(z)) return 0.0;
    return std::sin(pi * z) * gamma_fn(1.0 - z) / pi;
}

double i_series(double nu, double x) {
    // sum (x/2)^{2k+nu} / (k! Gamma(k+nu+1)), no exponential factor
    const double y = 0.25 * x * x;
    double term = std::pow(0.5 * x, nu) * recip_gamma(nu + 1.0);
    double sum = term;
    for (int k = 1; k < 500; ++k) {
        term *= y / (k * (k + nu));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

double i_asymptotic_scaled(double nu, double x) {
    // e^{-x} I_nu(x) ~ (2 pi x)^{-1/2} sum_k (-1)^k a_k(nu) / x^k
    const double mu = 4.0 * nu * nu;
    double term = 1.0;
    double sum = 1.0;
    double prev = 2.0;
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= -(mu - odd * odd) / (8.0 * k * x);
        if (std::abs(term) > prev) break; // series has started to diverge
        sum += term;
        prev = std::abs(term);
        if (prev < 1e-17 * std::abs(sum)) break;
    }
    return sum / std::sqrt(2.0 * pi * x);
}

void check_i_args(double nu, double x) {
    if (!(std::abs(nu) < 2.0)) throw DomainError("bessel_i: |nu| must be < 2");
    if (!(x > 0.0)) throw DomainError("bessel_i: x must be > 0");
}

// Steed's method (CF2) for K_mu, |mu| <= 1/2, x > 0; returns the scaled pair
// e^x K_mu and e^x K_{mu+1}.
void k_steed_scaled(double mu, double x, double& kmu, double& kmu1) {
    const double xi = 1.0 / x;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25 - mu * mu;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    int i = 1;
    for (; i <= 100000; ++i) {
        a -= 2.0 * i;
        c = -a * c / (i + 1.0);
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < 1e-17) break;
    }
    if (i > 100000) throw NumericalError("bessel_k: continued fraction did not converge");
    h *= a1;
    kmu = std::sqrt(pi / (2.0 * x)) / s;
    kmu1 = kmu * (mu + x + 0.5 - h) * xi;
}

double k_scaled_large(double nu, double x) {
    const double anu = std::abs(nu);
    const int nl = static_cast<int>(anu + 0.5);
    const double mu = anu - nl;
    double kmu = 0.0;
    double kmu1 = 0.0;
    k_steed_scaled(mu, x, kmu, kmu1);
    for (int i = 1; i <= nl; ++i) {
        const double next = (mu + i) * (2.0 / x) * kmu1 + kmu;
        kmu = kmu1;
        kmu1 = next;
    }
    return kmu;
}

constexpr double kReflectionLimit = 2.0;

} // namespace

double gamma_fn(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("gamma: x must be > 0");
    if (x < 0.5) return pi / (std::sin(pi * x) * lanczos_gamma(1.0 - x));
    return lanczos_gamma(x);
}

double bessel_i(double nu, double x) {
    check_i_args(nu, x);
    if (!(x < 700.0)) throw DomainError("bessel_i: overflow range, use bessel_i_scaled");
    if (x <= 30.0) return i_series(nu, x);
    return std::exp(x) * i_asymptotic_scaled(nu, x);
}

double bessel_i_scaled(double nu, double x) {
    check_i_args(nu, x);
    if (x <= 30.0) return std::exp(-x) * i_series(nu, x);
    return i_asymptotic_scaled(nu, x);
}

double bessel_k(double nu, double x) {
    if (near_integer(nu)) throw DomainError("bessel_k: nu too close to an integer");
    if (!(x > 0.0)) throw DomainError("bessel_k: x must be > 0");
    if (x <= kReflectionLimit) return 0.5 * pi * (bessel_i(-nu, x) - bessel_i(nu, x)) / std::sin(nu * pi);
    return std::exp(-x) * k_scaled_large(nu, x);
}

double bessel_k_scaled(double nu, double x) {
    if (near_integer(nu)) throw DomainError("bessel_k: nu too close to an integer");
    if (!(x > 0.0)) throw DomainError("bessel_k: x must be > 0");
    if (x <= kReflectionLimit) return std::exp(x) * bessel_k(nu, x);
    return k_scaled_large(nu, x);
}

double kummer_1f1(double a, double b, double z) {
    if (b <= 0.0 && b == std::round(b)) throw DomainError("kummer_1f1: b must not be a non-positive integer");
    if (z < 0.0) return std::exp(z) * kummer_1f1(b - a, b, -z);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 0; k < 100000; ++k) {
        term *= (a + k) / (b + k) * z / (k + 1.0);
        sum += term;
        if (term == 0.0 || (std::abs(term) < 1e-17 * std::abs(sum) && k > z)) return sum;
    }
    throw NumericalError("kummer_1f1: series did not converge");
}

cplx branch_power(double g, double p, BranchSide side) {
    if (!(g > 0.0)) throw DomainError("branch_power: g must be > 0");
    const double phase = (side == BranchSide::Above ? pi : -pi) * p;
    return std::polar(std::pow(g, p), phase);
}

} // namespace ptspectra
