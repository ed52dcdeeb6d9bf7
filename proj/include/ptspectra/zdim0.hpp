#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ptspectra/core.hpp"
#include "ptspectra/specfun.hpp"

namespace ptspectra {

/// Zero-dimensional partition functions Z = int dx x^{2N} exp(-V(x)).
///   Z1/Z2: V1/V2 with g = eps m^4    Z3/Z4: +-g x^4/4    Z5/Z6: V5/V6
///   Z7/Z8: x^2 times the Z3/Z4 weight
///   Z2N5/Z2N6: x^{2N} exp(-m^2 x^2/2 -+ g x^4/4)
/// Odd ids integrate the real axis, even ids the PT contour.
enum class PartitionId { Z1, Z2, Z3, Z4, Z5, Z6, Z7, Z8, Z2N5, Z2N6 };

PartitionId parse_partition_id(std::string_view name);
std::string_view partition_label(PartitionId id);
bool is_pt_case(PartitionId id);

struct PartitionCase {
    PartitionId id = PartitionId::Z3;
    double m = 1.0;
    double g_or_eps = 1.0; ///< eps for Z1, Z2, Z5, Z6; g otherwise
    int N = 0;

    void validate() const;
    /// Quartic coupling in the x variable.
    double coupling() const;
};

enum class QuadratureMethod { CompositeSimpson, GaussAdaptive };

std::string_view method_label(QuadratureMethod m);

struct QuadratureSpec {
    /// Overrides the case's rays. With two angles the first ray is traversed
    /// inward and the second outward; a single angle means the full line
    /// through the origin at that angle.
    std::vector<double> ray_angles;
    std::optional<double> r_max; ///< default: first radius where |f| < min(1e-12, abs_tol/100)
    double abs_tol = 1e-10;
    QuadratureMethod method = QuadratureMethod::CompositeSimpson;

    void validate() const;
};

struct QuadratureResult {
    cplx value;
    double est_error = 0.0;
    QuadratureMethod method = QuadratureMethod::CompositeSimpson;
    double r_max = 0.0;
};

/// x^{2N} exp(-c2 x^2 - c4 x^4) with possibly complex coefficients.
struct Integrand {
    int N = 0;
    cplx c2{0.0, 0.0};
    cplx c4{0.0, 0.0};

    cplx operator()(cplx x) const;
};

/// Half-line r e^{i theta}, r in [0, inf), weighted by `sign` (+1 outward).
struct Ray {
    double theta;
    int sign;
};

/// Contour integral over the given rays. Throws ContourDivergenceError when
/// the integrand grows on a ray and AccuracyError when refinement runs out.
QuadratureResult integrate_rays(const Integrand& f, const std::vector<Ray>& rays, const QuadratureSpec& q = {});

/// Rays of the PT contour: in along -3pi/4, out along -pi/4.
std::vector<Ray> pt_contour();
/// The full line through the origin at angle alpha, oriented outward along alpha.
std::vector<Ray> line_contour(double alpha);

/// Closed forms. Z1 and Z2 have none and throw UnsupportedError.
cplx z_closed(const PartitionCase& c);

/// Direct contour quadrature of the defining integral.
QuadratureResult z_quadrature(const PartitionCase& c, const QuadratureSpec& q = {});

/// Hermitian case (Z3, Z7, Z2N5) continued to coupling -g +- i0 through its
/// closed form, with branch phases applied to the powers of g.
cplx z_closed_continued(const PartitionCase& c, BranchSide side);

/// Hermitian case (Z1, Z3, Z5, Z7, Z2N5) continued to -g +- i0 by rotating
/// the integration line to angle -+pi/4, where the quartic term decays again.
QuadratureResult z_quadrature_continued(const PartitionCase& c, BranchSide side, const QuadratureSpec& q = {});

} // namespace ptspectra
