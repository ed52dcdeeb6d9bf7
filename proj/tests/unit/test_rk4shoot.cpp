#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ptspectra/rk4shoot.hpp"

using namespace ptspectra;
using std::numbers::pi;

namespace {

PotentialSpec harmonic() {
    PotentialSpec p;
    p.c2 = 1.0;
    return p;
}

ContourSpec real_axis(double r0 = 8.0, double h = 1e-3) {
    ContourSpec c;
    c.theta_L = -pi;
    c.theta_R = 0.0;
    c.r0 = r0;
    c.h = h;
    return c;
}

PotentialSpec pt_quartic(double g = 1.0) {
    PotentialSpec p;
    p.c4 = g;
    p.delta = 2.0;
    return p;
}

} // namespace

TEST_CASE("harmonic ground state has zero log-derivative at the origin") {
    const ShootingState s = integrate_ray(harmonic(), 1.0, 0.0, 8.0, 1e-3);
    CHECK(std::abs(s.dpsi / s.psi) < 1e-12);
    CHECK(std::abs(mismatch(harmonic(), 1.0, real_axis())) < 1e-10);
}

TEST_CASE("RK4 global error is fourth order") {
    // E = 1 is exact for the harmonic oscillator, so psi'(0)/psi(0) is pure discretization error.
    double err[3];
    const double steps[3] = {4e-3, 2e-3, 1e-3};
    for (int i = 0; i < 3; ++i) {
        const ShootingState s = integrate_ray(harmonic(), 1.0, 0.0, 8.0, steps[i]);
        err[i] = std::abs(s.dpsi / s.psi);
    }
    for (int i = 0; i < 2; ++i) {
        const double ratio = err[i] / err[i + 1];
        CHECK(ratio >= 14.0);
        CHECK(ratio <= 18.0);
    }
}

TEST_CASE("renormalization keeps large states finite") {
    // inward integration along the growing direction of a steep potential
    PotentialSpec p = pt_quartic(10.0);
    const ShootingState s = integrate_ray(p, 0.0, -pi / 6.0, 20.0, 1e-3);
    CHECK(std::isfinite(std::abs(s.psi)));
    CHECK(std::max(std::abs(s.psi), std::abs(s.dpsi)) <= kRenormThreshold);
}

TEST_CASE("integrate_ray argument checks") {
    CHECK_THROWS_AS(integrate_ray(harmonic(), 1.0, 0.0, -1.0, 1e-3), ConfigError);
    CHECK_THROWS_AS(integrate_ray(harmonic(), 1.0, 0.0, 1.0, 0.0), ConfigError);
    CHECK_THROWS_AS(integrate_ray(harmonic(), NAN, 0.0, 1.0, 1e-3), DomainError);
    CHECK_THROWS_AS(integrate_ray(harmonic(), 1.0, 0.0, 1.0, 1e-3, {}, {}), DomainError);
}

TEST_CASE("mismatch is invariant under rescaling the initial data") {
    const ContourSpec c{-5.0 * pi / 6.0, -pi / 6.0, 6.0, 1e-3};
    const PotentialSpec p = pt_quartic();
    const cplx ref = mismatch(p, 2.0, c);
    for (double lambda : {1e-3, 1.0, 1e3}) {
        const cplx a = mismatch(p, 2.0, c, lambda);
        CHECK(std::abs(a - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
    }
}

TEST_CASE("off-eigenvalue mismatch is clearly nonzero") {
    CHECK(std::abs(mismatch(harmonic(), 2.0, real_axis())) > 0.1);
    const ContourSpec c{-5.0 * pi / 6.0, -pi / 6.0, 6.0, 1e-3};
    CHECK(std::abs(mismatch(pt_quartic(), 0.5, c)) > 0.1);
}

TEST_CASE("odd harmonic levels are poles of A and roots of B") {
    const ContourSpec c = real_axis();
    const MatchValues mv = match_values(harmonic(), 3.0, c);
    REQUIRE(mv.inverse);
    CHECK(std::abs(*mv.inverse) < 1e-8);
    if (mv.log_derivative) CHECK(std::abs(*mv.log_derivative) > 1e6);
    CHECK(std::string(condition_label(MatchCondition::InverseLogDerivative)) == "inverse_log_derivative");
}

TEST_CASE("secant on a linear function lands exactly") {
    const MatchEvaluator linear = [](double e) { return MatchSample{e, cplx(e - 5.0, 0.0)}; };
    const EigenResult r = secant_solve(linear, 0.0, 1.0);
    CHECK(r.converged);
    CHECK(r.energy == 5.0);
    CHECK(r.residual == 0.0);
}

TEST_CASE("secant failure modes") {
    const MatchEvaluator flat = [](double e) { return MatchSample{e, cplx(1.0, 0.0)}; };
    CHECK_THROWS_AS(secant_solve(flat, 0.0, 1.0), StalledSecantError);
    CHECK_THROWS_AS(secant_solve(flat, 1.0, 1.0), DomainError);

    const MatchEvaluator rootless = [](double e) { return MatchSample{e, cplx(e * e + 1.0, 0.0)}; };
    SecantOptions opts;
    opts.max_iter = 5;
    try {
        secant_solve(rootless, 0.3, 0.7, opts);
        FAIL("expected NonConvergenceError");
    } catch (const NonConvergenceError& e) {
        CHECK_FALSE(e.best().converged);
        CHECK(e.best().residual >= 1.0);
    }
    opts.max_iter = 0;
    CHECK_THROWS_AS(secant_solve(rootless, 0.3, 0.7, opts), ConfigError);
}

TEST_CASE("harmonic spectrum") {
    const ScanResult s = scan_levels(harmonic(), real_axis(), 5, 0.0, 10.5);
    REQUIRE(s.levels.size() == 5);
    CHECK_FALSE(s.partial);
    for (int n = 0; n < 5; ++n) {
        CHECK(s.levels[n].energy == doctest::Approx(2.0 * n + 1.0).epsilon(1e-9));
        CHECK(s.levels[n].converged);
        CHECK(s.levels[n].level_hint == n);
    }
}

TEST_CASE("PT quartic ground state and real spectrum") {
    SpectrumRequest req;
    req.n_levels = 4;
    req.contour_delta = 2.0;
    const SpectrumResult r = compute_spectrum(pt_quartic(), req);
    REQUIRE(r.scan.levels.size() == 4);
    CHECK(r.scan.levels[0].energy == doctest::Approx(1.4771497536).epsilon(1e-9));
    for (std::size_t i = 1; i < r.scan.levels.size(); ++i) CHECK(r.scan.levels[i].energy > r.scan.levels[i - 1].energy);
}

TEST_CASE("quartic coupling scaling E(g) = g^(1/3) E(1)") {
    const ContourSpec c{-5.0 * pi / 6.0, -pi / 6.0, 6.0, 5e-4};
    const EigenResult e1 = find_eigenvalue(pt_quartic(1.0), c, 1.4, 1.5);
    ContourSpec c8 = c;
    c8.r0 = 4.0;
    const EigenResult e8 = find_eigenvalue(pt_quartic(8.0), c8, 2.9, 3.0);
    REQUIRE(e1.converged);
    REQUIRE(e8.converged);
    CHECK(e8.energy == doctest::Approx(2.0 * e1.energy).epsilon(1e-8));
}

TEST_CASE("levels do not depend on the contour radius") {
    SpectrumRequest req;
    req.n_levels = 3;
    req.contour_delta = 2.0;
    const SpectrumResult a = compute_spectrum(pt_quartic(), req);
    req.contour.r0_scale = 1.3;
    const SpectrumResult b = compute_spectrum(pt_quartic(), req);
    REQUIRE(a.scan.levels.size() == 3);
    REQUIRE(b.scan.levels.size() == 3);
    for (int i = 0; i < 3; ++i)
        CHECK(std::abs(a.scan.levels[i].energy - b.scan.levels[i].energy) < 1e-8 * a.scan.levels[i].energy);
}

TEST_CASE("PT inverted quartic and the anomaly-shifted Hermitian quartic are isospectral") {
    // -d2/dx2 - g x^4 on the wedges vs -d2/dx2 + 4 g x^4 - 2 sqrt(g) x on the real axis
    HamiltonianPreset pt{PresetName::PTInverted, 1.0, 1.0};
    HamiltonianPreset herm{PresetName::Anomaly, 1.0, 1.0};
    pt.m_kin = herm.m_kin = 0.5;
    const SpectrumResult a = preset_spectrum(pt, 3);
    const SpectrumResult b = preset_spectrum(herm, 3);
    REQUIRE(a.scan.levels.size() == 3);
    REQUIRE(b.scan.levels.size() == 3);
    for (int i = 0; i < 3; ++i)
        CHECK(std::abs(a.scan.levels[i].energy - b.scan.levels[i].energy) < 1e-6 * a.scan.levels[i].energy);
}

TEST_CASE("serial and parallel scans agree bit for bit") {
    const ContourSpec c{-5.0 * pi / 6.0, -pi / 6.0, 6.0, 1e-3};
    ScanOptions opts;
    opts.grid_points = 120;
    const ScanResult par = scan_levels(pt_quartic(), c, 3, 0.0, 12.0, opts);
    const ScanResult ser = scan_levels_serial(pt_quartic(), c, 3, 0.0, 12.0, opts);
    REQUIRE(par.levels.size() == ser.levels.size());
    CHECK(par.seeds == ser.seeds);
    for (std::size_t i = 0; i < par.levels.size(); ++i) {
        CHECK(par.levels[i].energy == ser.levels[i].energy);
        CHECK(par.levels[i].iterations == ser.levels[i].iterations);
    }
}

TEST_CASE("a too narrow window is reported as partial") {
    const ScanResult s = scan_levels(harmonic(), real_axis(), 5, 0.0, 4.0);
    CHECK(s.partial);
    CHECK(s.levels.size() == 2);
    SpectrumRequest req;
    req.n_levels = 3;
    req.e_hi = 4.0;
    CHECK(compute_spectrum(harmonic(), req).scan.partial);
}

TEST_CASE("scan argument checks") {
    CHECK_THROWS_AS(scan_levels(harmonic(), real_axis(), 0, 0.0, 1.0), ConfigError);
    CHECK_THROWS_AS(scan_levels(harmonic(), real_axis(), 1, 1.0, 1.0), ConfigError);
    ScanOptions opts;
    opts.grid_points = 2;
    CHECK_THROWS_AS(scan_levels(harmonic(), real_axis(), 1, 0.0, 1.0, opts), ConfigError);
}
