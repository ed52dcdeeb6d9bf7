#pragma once

#include <optional>
#include <vector>

#include "ptspectra/core.hpp"

namespace ptspectra {

struct WedgeAngles {
    double theta_L;
    double theta_R;
    double opening;
};

/// Centres of the left/right Stokes wedges of x^2 (ix)^delta and their common
/// opening angle.
WedgeAngles wedge_angles(double delta);

/// Two rays x = r e^{i theta_L}, x = r e^{i theta_R}, r in [0, r0], traversed
/// inward with radial step h.
struct ContourSpec {
    double theta_L = -3.14159265358979323846;
    double theta_R = 0.0;
    double r0 = 8.0;
    double h = 5e-4;

    int steps() const;
    void validate() const;
};

/// Size of the exponential separation between the growing and decaying WKB
/// solutions at x = r e^{i theta}: |Re int_0^r sqrt((V - E)/a) dx|, evaluated by
/// Simpson quadrature of the full potential with a continuously tracked root.
double wkb_decay_exponent(const PotentialSpec& p, double r, double theta, double energy = 0.0);

inline constexpr double kDefaultStep = 5e-4;
inline constexpr double kDecayTarget = 25.0;
inline constexpr double kMinAutoRadius = 4.0;
inline constexpr double kMaxAutoRadius = 20.0;

struct ContourOptions {
    std::optional<double> r0;
    std::optional<double> h;
    /// Highest energy the contour must resolve; enters the r0 sizing.
    double energy_ceiling = 0.0;
    /// Multiplies the automatically sized r0 (convergence studies).
    double r0_scale = 1.0;
};

/// Rays along the wedge centres for `delta` (delta = 0 gives the real axis).
/// Without an r0 hint, r0 is the smallest radius where the WKB exponent on both
/// rays reaches kDecayTarget, clamped to [kMinAutoRadius, kMaxAutoRadius].
ContourSpec build_contour(const PotentialSpec& p, double delta, const ContourOptions& opts = {});

struct ContourPoint {
    double re;
    double im;
};

/// `samples` equally spaced points from the origin out to r0 on each ray.
std::vector<ContourPoint> ray_polyline(const ContourSpec& c, double theta, int samples);

} // namespace ptspectra
