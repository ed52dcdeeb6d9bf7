#pragma once

namespace ptspectra {

/// Level k of the massive anharmonic oscillator, q0 = 2k + 1. The (h, c) form
/// of the expansion parameters is h^2 = sqrt(2) m, c^2 = g / 2.
struct MkParams {
    int k = 0;
    double m = 1.0;
    double g = 1.0;

    int q0() const { return 2 * k + 1; }
    double h2() const;
    double c2() const { return 0.5 * g; }
};

/// Real part of the weak-coupling expansion, truncated after the g^2 term:
/// (2k+1) m/sqrt2 - 3g(2k^2+2k+1)/(8m^2) - g^2(32k^3+48k^2+82k+33)/(16 sqrt2 m^5).
double mk_energy_real(int k, double m, double g);

/// Magnitude of the one-instanton imaginary part,
/// 2^{q0} h^2 (h^6 / 2c^2)^{q0/2} e^{-h^6/(6c^2)} / (sqrt(2 pi) k!).
double mk_energy_imag(int k, double m, double g);

/// Natural log of mk_energy_imag; stays finite where the magnitude underflows.
double mk_log_energy_imag(int k, double m, double g);

/// Symanzik scaling of a pure quartic level: g^{1/3} E(1).
double symanzik_scale(double e_ref, double g);

} // namespace ptspectra
