#include "ptspectra/zdim0.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "ptspectra/errors.hpp"

namespace ptspectra {

using std::numbers::pi;

namespace {

struct IdName {
    PartitionId id;
    std::string_view name;
};

constexpr std::array<IdName, 10> kIds = {{
    {PartitionId::Z1, "Z1"},     {PartitionId::Z2, "Z2"},     {PartitionId::Z3, "Z3"}, {PartitionId::Z4, "Z4"},
    {PartitionId::Z5, "Z5"},     {PartitionId::Z6, "Z6"},     {PartitionId::Z7, "Z7"}, {PartitionId::Z8, "Z8"},
    {PartitionId::Z2N5, "Z2N5"}, {PartitionId::Z2N6, "Z2N6"},
}};

} // namespace

PartitionId parse_partition_id(std::string_view name) {
    for (const auto& e : kIds) {
        if (e.name.size() != name.size()) continue;
        if (std::equal(name.begin(), name.end(), e.name.begin(),
                       [](char a, char b) { return std::toupper(static_cast<unsigned char>(a)) == b; }))
            return e.id;
    }
    throw ConfigError("unknown partition case '" + std::string(name) + "'");
}

std::string_view partition_label(PartitionId id) {
    for (const auto& e : kIds)
        if (e.id == id) return e.name;
    return "?";
}

bool is_pt_case(PartitionId id) {
    switch (id) {
    case PartitionId::Z2:
    case PartitionId::Z4:
    case PartitionId::Z6:
    case PartitionId::Z8:
    case PartitionId::Z2N6:
        return true;
    default:
        return false;
    }
}

void PartitionCase::validate() const {
    if (!(g_or_eps > 0.0) || !std::isfinite(g_or_eps)) throw DomainError("partition case: coupling must be > 0");
    switch (id) {
    case PartitionId::Z1:
    case PartitionId::Z2:
    case PartitionId::Z5:
    case PartitionId::Z6:
        if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("partition case: m must be > 0");
        break;
    case PartitionId::Z2N5:
    case PartitionId::Z2N6:
        if (!(m >= 0.0) || !std::isfinite(m)) throw DomainError("partition case: m must be >= 0");
        if (N < 0) throw DomainError("partition case: N must be >= 0");
        break;
    default:
        break;
    }
}

double PartitionCase::coupling() const {
    switch (id) {
    case PartitionId::Z1:
    case PartitionId::Z2:
    case PartitionId::Z5:
    case PartitionId::Z6:
        return g_or_eps * m * m * m * m;
    default:
        return g_or_eps;
    }
}

std::string_view method_label(QuadratureMethod m) {
    return m == QuadratureMethod::CompositeSimpson ? "composite-simpson" : "gauss-adaptive";
}

void QuadratureSpec::validate() const {
    if (!(abs_tol > 0.0)) throw ConfigError("quadrature abs_tol must be > 0");
    if (r_max && !(*r_max > 0.0)) throw ConfigError("quadrature r_max must be > 0");
    if (ray_angles.size() > 2) throw ConfigError("quadrature takes at most two ray angles");
}

cplx Integrand::operator()(cplx x) const {
    const cplx x2 = x * x;
    cplx pw(1.0, 0.0);
    for (int i = 0; i < N; ++i) pw *= x2;
    return pw * std::exp(-c2 * x2 - c4 * x2 * x2);
}

std::vector<Ray> pt_contour() {
    return {{-0.75 * pi, -1}, {-0.25 * pi, +1}};
}

std::vector<Ray> line_contour(double alpha) {
    return {{alpha + pi, -1}, {alpha, +1}};
}

namespace {

constexpr int kMaxSimpsonIntervals = 1 << 21;
constexpr int kMaxGaussIntervals = 20000;

// log|f| along the ray and its radial slope.
struct RayProfile {
    const Integrand& f;
    double A; // Re(c2 e^{2i theta})
    double B; // Re(c4 e^{4i theta})

    RayProfile(const Integrand& f_, double theta)
        : f(f_), A((f_.c2 * std::polar(1.0, 2.0 * theta)).real()), B((f_.c4 * std::polar(1.0, 4.0 * theta)).real()) {}

    bool decays() const {
        if (B > 1e-14 * std::abs(f.c4)) return true;
        return f.c4 == cplx{} && A > 1e-14 * std::abs(f.c2);
    }
    double log_mag(double r) const { return 2.0 * f.N * std::log(r) - A * r * r - B * r * r * r * r; }
    double slope(double r) const { return 2.0 * f.N / r - 2.0 * A * r - 4.0 * B * r * r * r; }
};

double find_r_max(const RayProfile& prof, double threshold) {
    const double log_thr = std::log(threshold);
    for (double r = 0.5; r <= 2000.0; r += 0.25) {
        if (prof.log_mag(r) < log_thr && prof.slope(r) < 0.0) return r;
    }
    throw ContourDivergenceError("integrand does not fall below threshold on ray");
}

cplx simpson(const Integrand& f, cplx dir, double R, int n) {
    const double h = R / n;
    cplx sum = f(cplx{}) + f(dir * R);
    for (int k = 1; k < n; ++k) sum += (k % 2 ? 4.0 : 2.0) * f(dir * (k * h));
    return sum * (h / 3.0);
}

struct Piece {
    double a, b;
    cplx value;
    double err;
};

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

Piece gk15(const Integrand& f, cplx dir, double a, double b) {
    const double c = 0.5 * (a + b);
    const double hl = 0.5 * (b - a);
    const cplx fc = f(dir * c);
    cplx kron = fc * kWgk[7];
    cplx gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = hl * kXgk[j];
        const cplx s = f(dir * (c - dx)) + f(dir * (c + dx));
        kron += kWgk[j] * s;
        if (j % 2 == 1) gauss += kWg[j / 2] * s;
    }
    return {a, b, kron * hl, std::abs((kron - gauss) * hl)};
}

cplx gauss_adaptive(const Integrand& f, cplx dir, double R, double tol, double& err_out) {
    std::vector<Piece> pieces;
    const int start = 8;
    for (int i = 0; i < start; ++i) pieces.push_back(gk15(f, dir, R * i / start, R * (i + 1) / start));
    auto by_err = [](const Piece& x, const Piece& y) { return x.err < y.err; };
    std::make_heap(pieces.begin(), pieces.end(), by_err);
    for (;;) {
        double total = 0.0;
        for (const Piece& p : pieces) total += p.err;
        if (total <= tol) {
            err_out = total;
            break;
        }
        if (static_cast<int>(pieces.size()) >= kMaxGaussIntervals)
            throw AccuracyError("gauss-adaptive quadrature: interval budget exhausted", total);
        std::pop_heap(pieces.begin(), pieces.end(), by_err);
        const Piece worst = pieces.back();
        pieces.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        pieces.push_back(gk15(f, dir, worst.a, mid));
        std::push_heap(pieces.begin(), pieces.end(), by_err);
        pieces.push_back(gk15(f, dir, mid, worst.b));
        std::push_heap(pieces.begin(), pieces.end(), by_err);
    }
    // sum in interval order so the result does not depend on heap layout
    std::sort(pieces.begin(), pieces.end(), [](const Piece& x, const Piece& y) { return x.a < y.a; });
    cplx sum{};
    for (const Piece& p : pieces) sum += p.value;
    return sum;
}

cplx integrate_ray(const Integrand& f, double theta, double R, double tol, QuadratureMethod method,
                   double& err_out) {
    const cplx dir = std::polar(1.0, theta);
    if (method == QuadratureMethod::GaussAdaptive) return dir * gauss_adaptive(f, dir, R, tol, err_out);

    int n = 128;
    cplx coarse = simpson(f, dir, R, n);
    for (;;) {
        n *= 2;
        const cplx fine = simpson(f, dir, R, n);
        const double err = std::abs(fine - coarse) / 15.0;
        if (err <= tol && n >= 256) {
            err_out = err;
            return dir * (fine + (fine - coarse) / 15.0);
        }
        if (n >= kMaxSimpsonIntervals) throw AccuracyError("composite Simpson: refinement limit reached", err);
        coarse = fine;
    }
}

} // namespace

QuadratureResult integrate_rays(const Integrand& f, const std::vector<Ray>& rays, const QuadratureSpec& q) {
    q.validate();
    if (rays.empty()) throw ConfigError("integrate_rays: empty contour");
    const double threshold = std::min(1e-12, 1e-2 * q.abs_tol);
    QuadratureResult out;
    out.method = q.method;
    out.value = cplx{};
    for (const Ray& ray : rays) {
        const RayProfile prof(f, ray.theta);
        if (!prof.decays()) throw ContourDivergenceError("integrand does not decay along the contour ray");
        double R = q.r_max ? *q.r_max : find_r_max(prof, threshold);
        if (q.r_max && std::exp(prof.log_mag(R)) >= threshold)
            throw ContourDivergenceError("integrand not negligible at the requested r_max");
        out.r_max = std::max(out.r_max, R);
        double err = 0.0;
        out.value += static_cast<double>(ray.sign) *
                     integrate_ray(f, ray.theta, R, q.abs_tol / rays.size(), q.method, err);
        out.est_error += err;
    }
    return out;
}

namespace {

Integrand case_integrand(const PartitionCase& c) {
    const double g = c.coupling();
    Integrand f;
    switch (c.id) {
    case PartitionId::Z1: f = {0, 0.5 * c.m * c.m, 0.25 * g}; break;
    case PartitionId::Z2: f = {0, 0.5 * c.m * c.m, -0.25 * g}; break;
    case PartitionId::Z3: f = {0, 0.0, 0.25 * g}; break;
    case PartitionId::Z4: f = {0, 0.0, -0.25 * g}; break;
    case PartitionId::Z5: f = {0, -0.5 * c.m * c.m, 0.25 * g}; break;
    case PartitionId::Z6: f = {0, -0.5 * c.m * c.m, -0.25 * g}; break;
    case PartitionId::Z7: f = {1, 0.0, 0.25 * g}; break;
    case PartitionId::Z8: f = {1, 0.0, -0.25 * g}; break;
    case PartitionId::Z2N5: f = {c.N, 0.5 * c.m * c.m, 0.25 * g}; break;
    case PartitionId::Z2N6: f = {c.N, 0.5 * c.m * c.m, -0.25 * g}; break;
    }
    return f;
}

std::vector<Ray> rays_from_spec(const QuadratureSpec& q, std::vector<Ray> fallback) {
    if (q.ray_angles.empty()) return fallback;
    if (q.ray_angles.size() == 1) return line_contour(q.ray_angles[0]);
    return {{q.ray_angles[0], -1}, {q.ray_angles[1], +1}};
}

// Z2N5 with the coupling lambda entering as lam_pow(p) = lambda^p.
template <class Pow>
cplx multicomponent_hermitian(int N, double m, double g_abs, double z_arg, Pow lam_pow) {
    const double a1 = 0.5 * N + 0.25;
    const double a3 = 0.5 * N + 0.75;
    const cplx first = lam_pow(0.5) * gamma_fn(a1) * kummer_1f1(a1, 0.5, z_arg);
    const cplx second = m * m * gamma_fn(a3) * kummer_1f1(a3, 1.5, z_arg);
    (void)g_abs;
    return std::pow(2.0, N - 0.5) * lam_pow(-0.5 * N - 0.75) * (first - second);
}

void require_finite(cplx v, const char* what) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw DomainError(std::string(what) + ": overflow");
}

} // namespace

cplx z_closed(const PartitionCase& c) {
    c.validate();
    const double g = c.coupling();
    const double g14 = std::pow(g, 0.25);
    const double g34 = std::pow(g, 0.75);
    cplx v;
    switch (c.id) {
    case PartitionId::Z1:
    case PartitionId::Z2:
        throw UnsupportedError("no closed form for " + std::string(partition_label(c.id)) + "; use z_quadrature");
    case PartitionId::Z3: v = gamma_fn(0.25) / (std::sqrt(2.0) * g14); break;
    case PartitionId::Z4: v = gamma_fn(0.25) / (2.0 * g14); break;
    case PartitionId::Z7: v = std::sqrt(2.0) * gamma_fn(0.75) / g34; break;
    case PartitionId::Z8: v = -gamma_fn(0.75) / g34; break;
    case PartitionId::Z5: {
        const double y = 1.0 / (8.0 * c.g_or_eps);
        const double pref = pi / (2.0 * c.m * std::sqrt(c.g_or_eps));
        v = pref * std::exp(2.0 * y) * (bessel_i_scaled(-0.25, y) + bessel_i_scaled(0.25, y));
        break;
    }
    case PartitionId::Z6: {
        const double y = 1.0 / (8.0 * c.g_or_eps);
        v = std::exp(-2.0 * y) * bessel_k_scaled(-0.25, y) / (2.0 * c.m * std::sqrt(c.g_or_eps));
        break;
    }
    case PartitionId::Z2N5:
        v = multicomponent_hermitian(c.N, c.m, g, std::pow(c.m, 4) / (4.0 * g),
                                     [g](double p) { return cplx(std::pow(g, p), 0.0); });
        break;
    case PartitionId::Z2N6: {
        const double a1 = 0.5 * c.N + 0.25;
        const double a3 = 0.5 * c.N + 0.75;
        const double z = -std::pow(c.m, 4) / (4.0 * g);
        const double first = std::sqrt(g) * gamma_fn(a1) * kummer_1f1(a1, 0.5, z) * std::cos(0.5 * pi * (c.N + 0.5));
        const double second = c.m * c.m * gamma_fn(a3) * kummer_1f1(a3, 1.5, z) * std::cos(0.5 * pi * (c.N - 0.5));
        v = std::pow(2.0, c.N - 0.5) * std::pow(g, -0.5 * c.N - 0.75) * (first + second);
        break;
    }
    }
    require_finite(v, "z_closed");
    return v;
}

QuadratureResult z_quadrature(const PartitionCase& c, const QuadratureSpec& q) {
    c.validate();
    const std::vector<Ray> fallback = is_pt_case(c.id) ? pt_contour() : line_contour(0.0);
    return integrate_rays(case_integrand(c), rays_from_spec(q, fallback), q);
}

cplx z_closed_continued(const PartitionCase& c, BranchSide side) {
    c.validate();
    const double g = c.coupling();
    cplx v;
    switch (c.id) {
    case PartitionId::Z3: v = gamma_fn(0.25) / std::sqrt(2.0) * branch_power(g, -0.25, side); break;
    case PartitionId::Z7: v = std::sqrt(2.0) * gamma_fn(0.75) * branch_power(g, -0.75, side); break;
    case PartitionId::Z2N5:
        v = multicomponent_hermitian(c.N, c.m, g, -std::pow(c.m, 4) / (4.0 * g),
                                     [g, side](double p) { return branch_power(g, p, side); });
        break;
    default:
        throw UnsupportedError("closed-form continuation only for Z3, Z7 and Z2N5");
    }
    require_finite(v, "z_closed_continued");
    return v;
}

QuadratureResult z_quadrature_continued(const PartitionCase& c, BranchSide side, const QuadratureSpec& q) {
    c.validate();
    if (is_pt_case(c.id)) throw UnsupportedError("continuation applies to the Hermitian cases only");
    Integrand f = case_integrand(c);
    f.c4 = -f.c4;
    const double alpha = side == BranchSide::Above ? -0.25 * pi : 0.25 * pi;
    return integrate_rays(f, rays_from_spec(q, line_contour(alpha)), q);
}

} // namespace ptspectra
