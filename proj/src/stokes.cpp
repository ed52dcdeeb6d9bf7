#include "ptspectra/stokes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ptspectra/errors.hpp"

namespace ptspectra {

using std::numbers::pi;

WedgeAngles wedge_angles(double delta) {
    if (!(delta >= 0.0) || !std::isfinite(delta)) throw DomainError("wedge_angles: delta must be >= 0");
    const double tilt = delta / (delta + 4.0) * (pi / 2.0);
    return {-pi + tilt, -tilt, 2.0 * pi / (delta + 4.0)};
}

int ContourSpec::steps() const {
    return static_cast<int>(std::lround(r0 / h));
}

void ContourSpec::validate() const {
    if (!(h > 0.0) || !std::isfinite(h)) throw ConfigError("contour step h must be > 0");
    if (!(r0 > 0.0) || !std::isfinite(r0)) throw ConfigError("contour radius r0 must be > 0");
    if (steps() < 1) throw ConfigError("contour radius must span at least one step");
    if (!(theta_L > -1.5 * pi && theta_L <= 0.0)) throw ConfigError("theta_L outside (-3pi/2, 0]");
    if (!(theta_R >= -0.5 * pi && theta_R <= 0.5 * pi)) throw ConfigError("theta_R outside [-pi/2, pi/2]");
}

double wkb_decay_exponent(const PotentialSpec& p, double r, double theta, double energy) {
    if (!(r > 0.0)) throw DomainError("wkb_decay_exponent: r must be > 0");
    constexpr int n = 2048;
    const RayPotential V(p, theta);
    const cplx dir = std::polar(1.0, theta);
    const double dr = r / n;
    cplx prev(0.0, 0.0);
    cplx sum(0.0, 0.0);
    for (int k = 0; k <= n; ++k) {
        const double rk = k * dr;
        cplx s = std::sqrt((V(rk) - energy) / p.a);
        if (k > 0 && std::abs(s - prev) > std::abs(s + prev)) s = -s;
        prev = s;
        const double w = (k == 0 || k == n) ? 1.0 : (k % 2 ? 4.0 : 2.0);
        sum += w * s;
    }
    return std::abs((sum * dir * (dr / 3.0)).real());
}

ContourSpec build_contour(const PotentialSpec& p, double delta, const ContourOptions& opts) {
    const WedgeAngles w = wedge_angles(delta);
    ContourSpec c;
    c.theta_L = w.theta_L;
    c.theta_R = w.theta_R;
    c.h = opts.h.value_or(kDefaultStep);
    if (!(c.h > 0.0)) throw ConfigError("contour step h must be > 0");
    if (opts.r0) {
        if (!(*opts.r0 > 0.0)) throw ConfigError("contour radius r0 must be > 0");
        c.r0 = *opts.r0;
    } else {
        p.validate();
        double r = kMaxAutoRadius;
        for (double trial = 0.25; trial <= kMaxAutoRadius; trial += 0.25) {
            const double left = wkb_decay_exponent(p, trial, c.theta_L, opts.energy_ceiling);
            const double right = wkb_decay_exponent(p, trial, c.theta_R, opts.energy_ceiling);
            if (std::min(left, right) >= kDecayTarget) {
                r = trial;
                break;
            }
        }
        if (!(opts.r0_scale > 0.0)) throw ConfigError("r0_scale must be > 0");
        c.r0 = std::clamp(r, kMinAutoRadius, kMaxAutoRadius) * opts.r0_scale;
    }
    c.validate();
    return c;
}

std::vector<ContourPoint> ray_polyline(const ContourSpec& c, double theta, int samples) {
    if (samples < 2) throw ConfigError("polyline needs at least two samples");
    std::vector<ContourPoint> pts;
    pts.reserve(samples);
    for (int k = 0; k < samples; ++k) {
        const cplx x = std::polar(c.r0 * k / (samples - 1), theta);
        pts.push_back({x.real(), x.imag()});
    }
    return pts;
}

} // namespace ptspectra
