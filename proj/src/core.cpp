#include "ptspectra/core.hpp"

#include <cmath>

#include "ptspectra/errors.hpp"

namespace ptspectra {

void PotentialSpec::validate() const {
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("kinetic coefficient a must be > 0");
    if (!(c4 >= 0.0) || !std::isfinite(c4)) throw DomainError("deformation magnitude c4 must be >= 0");
    if (!(delta >= 0.0) || !std::isfinite(delta)) throw DomainError("deformation exponent delta must be >= 0");
    if (c4_sign != 1 && c4_sign != -1) throw DomainError("c4_sign must be +1 or -1");
    if (!std::isfinite(c1) || !std::isfinite(c2)) throw DomainError("potential coefficients must be finite");
}

cplx eval_potential(const PotentialSpec& p, cplx x) {
    const cplx x2 = x * x;
    cplx deform = x2;
    if (p.delta != 0.0) {
        const cplx ix = cplx(0.0, 1.0) * x;
        // x = 0 with delta > 0 gives 0; std::log would produce -inf there.
        deform = (ix == cplx(0.0, 0.0)) ? cplx(0.0, 0.0) : x2 * std::exp(p.delta * std::log(ix));
    }
    return p.c1 * x + p.c2 * x2 + static_cast<double>(p.c4_sign) * p.c4 * deform;
}

RayPotential::RayPotential(const PotentialSpec& p, double theta) {
    const cplx e1 = std::polar(1.0, theta);
    const cplx e2 = e1 * e1;
    lin_ = p.c1 * e1;
    quad_ = p.c2 * e2;
    const double phase = std::arg(cplx(0.0, 1.0) * e1);
    deform_ = static_cast<double>(p.c4_sign) * p.c4 * e2 * std::polar(1.0, p.delta * phase);
    deform_power_ = 2.0 + p.delta;
    integer_power_ = p.delta == std::floor(p.delta) && p.delta <= 16.0;
    int_power_ = integer_power_ ? static_cast<int>(deform_power_) : 0;
}

cplx RayPotential::operator()(double r) const {
    double rp = 1.0;
    if (integer_power_) {
        for (int k = 0; k < int_power_; ++k) rp *= r;
    } else {
        rp = std::pow(r, deform_power_);
    }
    return lin_ * r + quad_ * (r * r) + deform_ * rp;
}

PresetName parse_preset_name(std::string_view name) {
    if (name == "v1") return PresetName::V1;
    if (name == "v2") return PresetName::V2;
    if (name == "v3") return PresetName::V3;
    if (name == "v4") return PresetName::V4;
    if (name == "v5") return PresetName::V5;
    if (name == "v6") return PresetName::V6;
    if (name == "massive-ao") return PresetName::MassiveAO;
    if (name == "massless-quartic") return PresetName::MasslessQuartic;
    if (name == "pt-inverted") return PresetName::PTInverted;
    if (name == "anomaly") return PresetName::Anomaly;
    throw ConfigError("unknown preset '" + std::string(name) + "'");
}

std::string_view preset_label(PresetName name) {
    switch (name) {
    case PresetName::V1: return "v1";
    case PresetName::V2: return "v2";
    case PresetName::V3: return "v3";
    case PresetName::V4: return "v4";
    case PresetName::V5: return "v5";
    case PresetName::V6: return "v6";
    case PresetName::MassiveAO: return "massive-ao";
    case PresetName::MasslessQuartic: return "massless-quartic";
    case PresetName::PTInverted: return "pt-inverted";
    case PresetName::Anomaly: return "anomaly";
    }
    return "?";
}

bool is_pt_phase(PresetName name) {
    switch (name) {
    case PresetName::V2:
    case PresetName::V4:
    case PresetName::V6:
    case PresetName::MassiveAO:
    case PresetName::PTInverted:
        return true;
    default:
        return false;
    }
}

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(std::string(what) + " must be > 0");
}

} // namespace

PotentialSpec preset_to_spec(const HamiltonianPreset& preset) {
    require_positive(preset.g, "g");
    PotentialSpec p;
    p.delta = 2.0;
    switch (preset.name) {
    case PresetName::V1:
    case PresetName::V2:
    case PresetName::V5:
    case PresetName::V6:
        require_positive(preset.m, "m");
        p.c2 = (preset.name == PresetName::V5 || preset.name == PresetName::V6 ? -0.5 : 0.5) * preset.m * preset.m;
        p.c4 = 0.25 * preset.g;
        p.c4_sign = is_pt_phase(preset.name) ? +1 : -1;
        break;
    case PresetName::V3:
    case PresetName::V4:
        p.c4 = 0.25 * preset.g;
        p.c4_sign = is_pt_phase(preset.name) ? +1 : -1;
        break;
    case PresetName::MassiveAO:
        require_positive(preset.m, "m");
        if (!(preset.delta >= 0.0)) throw ConfigError("delta must be >= 0");
        p.c2 = 0.5 * preset.m * preset.m;
        p.c4 = 0.25 * preset.g;
        p.delta = preset.delta;
        break;
    case PresetName::MasslessQuartic:
        require_positive(preset.hbar, "hbar");
        p.a = preset.hbar * preset.hbar;
        p.c4 = preset.g;
        p.c4_sign = -1;
        break;
    case PresetName::PTInverted:
        require_positive(preset.hbar, "hbar");
        require_positive(preset.m_kin, "m_kin");
        if (!(preset.delta >= 0.0)) throw ConfigError("delta must be >= 0");
        p.a = preset.hbar * preset.hbar / (2.0 * preset.m_kin);
        p.c4 = preset.g;
        p.delta = preset.delta;
        break;
    case PresetName::Anomaly:
        require_positive(preset.hbar, "hbar");
        require_positive(preset.m_kin, "m_kin");
        p.a = preset.hbar * preset.hbar / (2.0 * preset.m_kin);
        p.c4 = 4.0 * preset.g;
        p.c4_sign = -1;
        p.c1 = -preset.hbar * std::sqrt(2.0 * preset.g / preset.m_kin);
        break;
    }
    return p;
}

double contour_delta(const HamiltonianPreset& preset) {
    return is_pt_phase(preset.name) ? preset_to_spec(preset).delta : 0.0;
}

} // namespace ptspectra
