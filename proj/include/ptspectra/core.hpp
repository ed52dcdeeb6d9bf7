#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>

namespace ptspectra {

using cplx = std::complex<double>;

/// Generalized potential V(x) = c1 x + c2 x^2 + c4_sign c4 x^2 (ix)^delta for the
/// operator H = -a d^2/dx^2 + V.
///
/// The deformation term uses the principal branch (ix)^delta = exp(delta Log(ix)).
/// delta = 0 turns it into an extra harmonic term, delta = 2 into -x^4, so the
/// Hermitian quartic g x^4 is {delta = 2, c4_sign = -1, c4 = g}.
struct PotentialSpec {
    double a = 1.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double c4 = 0.0;
    double delta = 0.0;
    int c4_sign = +1;

    /// Throws DomainError unless a > 0, c4 >= 0, delta >= 0 and c4_sign is +-1.
    void validate() const;
};

cplx eval_potential(const PotentialSpec& p, cplx x);

/// The potential restricted to the ray x = r e^{i theta}, written as a sum of
/// monomials in r so the shooting integrator avoids complex logarithms.
class RayPotential {
public:
    RayPotential(const PotentialSpec& p, double theta);

    cplx operator()(double r) const;

private:
    cplx lin_;
    cplx quad_;
    cplx deform_;
    double deform_power_;
    bool integer_power_;
    int int_power_;
};

enum class PresetName {
    V1, V2, V3, V4, V5, V6,
    MassiveAO,
    MasslessQuartic,
    PTInverted,
    Anomaly,
};

/// Named Hamiltonian with its physical parameters. Unused fields are ignored.
struct HamiltonianPreset {
    PresetName name = PresetName::MasslessQuartic;
    double m = 1.0;      ///< mass parameter of the harmonic term
    double g = 1.0;      ///< quartic coupling, > 0
    double hbar = 1.0;
    double m_kin = 0.5;  ///< kinetic mass (PTInverted / Anomaly)
    double delta = 2.0;  ///< deformation exponent of the PT presets
};

PresetName parse_preset_name(std::string_view name);
std::string_view preset_label(PresetName name);

/// True when the preset's bound states live on PT-symmetric Stokes wedges rather
/// than on the real axis.
bool is_pt_phase(PresetName name);

PotentialSpec preset_to_spec(const HamiltonianPreset& preset);

/// Deformation exponent that fixes the shooting contour: the preset's delta for
/// PT presets, 0 (the real axis) for Hermitian ones.
double contour_delta(const HamiltonianPreset& preset);

} // namespace ptspectra
