#include "ptspectra/mk_series.hpp"

#include <cmath>
#include <numbers>

#include "ptspectra/errors.hpp"

namespace ptspectra {

double MkParams::h2() const {
    return std::numbers::sqrt2 * m;
}

double mk_energy_real(int k, double m, double g) {
    if (k < 0) throw DomainError("mk_energy_real: k must be >= 0");
    if (!(m > 0.0)) throw DomainError("mk_energy_real: m must be > 0");
    if (!(g >= 0.0)) throw DomainError("mk_energy_real: g must be >= 0");
    const double K = k;
    const double s2 = std::numbers::sqrt2;
    const double m2 = m * m;
    const double m5 = m2 * m2 * m;
    return (2.0 * K + 1.0) * m / s2 - 3.0 * g * (2.0 * K * K + 2.0 * K + 1.0) / (8.0 * m2) -
           g * g * (32.0 * K * K * K + 48.0 * K * K + 82.0 * K + 33.0) / (16.0 * s2 * m5);
}

double mk_log_energy_imag(int k, double m, double g) {
    if (k < 0) throw DomainError("mk_energy_imag: k must be >= 0");
    if (!(m > 0.0) || !(g > 0.0)) throw DomainError("mk_energy_imag: m and g must be > 0");
    const MkParams p{k, m, g};
    const double q0 = p.q0();
    const double h2 = p.h2();
    const double ratio = h2 * h2 * h2 / p.c2(); // h^6 / c^2
    return q0 * std::log(2.0) + std::log(h2) + 0.5 * q0 * std::log(0.5 * ratio) - ratio / 6.0 -
           0.5 * std::log(2.0 * std::numbers::pi) - std::lgamma(k + 1.0);
}

double mk_energy_imag(int k, double m, double g) {
    return std::exp(mk_log_energy_imag(k, m, g));
}

double symanzik_scale(double e_ref, double g) {
    if (!(g > 0.0)) throw DomainError("symanzik_scale: g must be > 0 (use branch_power for negative coupling)");
    return std::cbrt(g) * e_ref;
}

} // namespace ptspectra
