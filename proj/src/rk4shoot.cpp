#include "ptspectra/rk4shoot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ptspectra/parallel.hpp"

namespace ptspectra {

ShootingState integrate_ray(const PotentialSpec& p, double energy, double theta, double r0, double h,
                            cplx psi_init, cplx dpsi_init) {
    if (!(r0 > 0.0) || !(h > 0.0)) throw ConfigError("integrate_ray: r0 and h must be > 0");
    if (!std::isfinite(energy)) throw DomainError("integrate_ray: energy must be finite");
    if (psi_init == cplx{} && dpsi_init == cplx{}) throw DomainError("integrate_ray: trivial initial state");

    const int n = std::max(1, static_cast<int>(std::lround(r0 / h)));
    const double step = -r0 / n;
    const RayPotential V(p, theta);
    const cplx rot = std::polar(1.0 / p.a, 2.0 * theta);
    auto coeff = [&](double r) { return rot * (V(r) - energy); };

    ShootingState s;
    s.r = r0;
    s.psi = psi_init;
    s.dpsi = dpsi_init;
    cplx q_start = coeff(r0);
    for (int i = 0; i < n; ++i) {
        const double r = r0 + i * step;
        const double r_mid = r + 0.5 * step;
        const double r_end = (i + 1 == n) ? 0.0 : r0 + (i + 1) * step;
        const cplx q_mid = coeff(r_mid);
        const cplx q_end = coeff(r_end);

        const cplx k1 = step * s.dpsi;
        const cplx l1 = step * q_start * s.psi;
        const cplx k2 = step * (s.dpsi + 0.5 * l1);
        const cplx l2 = step * q_mid * (s.psi + 0.5 * k1);
        const cplx k3 = step * (s.dpsi + 0.5 * l2);
        const cplx l3 = step * q_mid * (s.psi + 0.5 * k2);
        const cplx k4 = step * (s.dpsi + l3);
        const cplx l4 = step * q_end * (s.psi + k3);

        s.psi += (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0;
        s.dpsi += (l1 + 2.0 * l2 + 2.0 * l3 + l4) / 6.0;
        s.r = r_end;
        q_start = q_end;

        const double mag = std::max(std::abs(s.psi), std::abs(s.dpsi));
        if (!std::isfinite(mag)) throw IntegrationError("integrate_ray: non-finite state", s.r);
        if (mag > kRenormThreshold) {
            s.psi /= mag;
            s.dpsi /= mag;
            s.scale_log += std::log(mag);
        }
    }
    if (s.psi == cplx{} && s.dpsi == cplx{}) throw IntegrationError("integrate_ray: state collapsed to zero", 0.0);
    return s;
}

const char* condition_label(MatchCondition c) {
    return c == MatchCondition::LogDerivative ? "log_derivative" : "inverse_log_derivative";
}

namespace {

inline constexpr double kPoleAmplitude = 1e-290;

// `den_log_scale` is the renormalization log of the state `den` belongs to;
// a raw amplitude below kPoleAmplitude counts as a zero.
std::optional<cplx> safe_ratio(cplx num, cplx den, double den_log_scale) {
    if (den == cplx{}) return std::nullopt;
    if (std::log(std::abs(den)) + den_log_scale < std::log(kPoleAmplitude)) return std::nullopt;
    const cplx q = num / den;
    if (!std::isfinite(q.real()) || !std::isfinite(q.imag())) return std::nullopt;
    return q;
}

} // namespace

MatchValues match_values(const PotentialSpec& p, double energy, const ContourSpec& c, double init_scale) {
    const cplx init(init_scale, 0.0);
    const ShootingState left = integrate_ray(p, energy, c.theta_L, c.r0, c.h, init, init);
    const ShootingState right = integrate_ray(p, energy, c.theta_R, c.r0, c.h, init, init);
    // dpsi/dr = e^{i theta} dpsi/dx on each ray.
    const cplx rot_L = std::polar(1.0, -c.theta_L);
    const cplx rot_R = std::polar(1.0, -c.theta_R);
    const cplx dx_L = rot_L * left.dpsi;
    const cplx dx_R = rot_R * right.dpsi;

    MatchValues out;
    const auto yL = safe_ratio(dx_L, left.psi, left.scale_log);
    const auto yR = safe_ratio(dx_R, right.psi, right.scale_log);
    if (yL && yR) out.log_derivative = *yL - *yR;
    const auto wL = safe_ratio(left.psi, dx_L, left.scale_log);
    const auto wR = safe_ratio(right.psi, dx_R, right.scale_log);
    if (wL && wR) out.inverse = *wL - *wR;
    return out;
}

cplx mismatch(const PotentialSpec& p, double energy, const ContourSpec& c, double init_scale) {
    const MatchValues mv = match_values(p, energy, c, init_scale);
    if (!mv.log_derivative) throw PoleError("mismatch: psi(0) vanishes on one side");
    return *mv.log_derivative;
}

cplx matching_function(const PotentialSpec& p, double energy, const ContourSpec& c, MatchCondition cond) {
    const MatchValues mv = match_values(p, energy, c);
    const auto& v = cond == MatchCondition::LogDerivative ? mv.log_derivative : mv.inverse;
    if (!v) throw PoleError("matching function singular at this energy");
    return *v;
}

EigenResult secant_solve(const MatchEvaluator& eval, double e1, double e2, const SecantOptions& opts) {
    if (e1 == e2) throw DomainError("secant_solve: seeds must differ");
    if (opts.max_iter < 1) throw ConfigError("secant_solve: max_iter must be >= 1");

    MatchSample s1 = eval(e1);
    MatchSample s2 = eval(e2);
    EigenResult best;
    auto note_best = [&](const MatchSample& s, int it) {
        if (it == 0 && best.iterations == 0 && best.residual == 0.0 && best.energy == 0.0) {
            best.energy = s.energy;
            best.residual = std::abs(s.value);
        } else if (std::abs(s.value) < best.residual) {
            best.energy = s.energy;
            best.residual = std::abs(s.value);
        }
        best.iterations = it;
    };
    note_best(s1, 0);
    note_best(s2, 0);

    for (int it = 1; it <= opts.max_iter; ++it) {
        if (s1.value == s2.value) {
            const double scale = std::max(1.0, std::abs(best.energy));
            if (best.residual < opts.tol_A && std::abs(s1.energy - s2.energy) < opts.tol_E * scale) {
                best.converged = true;
                return best;
            }
            throw StalledSecantError("secant stalled: A(E1) == A(E2)");
        }
        const cplx e3c = (s1.energy * s2.value - s2.energy * s1.value) / (s2.value - s1.value);
        const double e3 = e3c.real();
        if (!std::isfinite(e3)) throw StalledSecantError("secant produced a non-finite iterate");

        const MatchSample s3 = eval(e3);
        const bool keep_first = std::abs(s1.value) <= std::abs(s2.value);
        const double kept = keep_first ? s1.energy : s2.energy;
        const double increment = std::abs(s3.energy - kept);
        (keep_first ? s2 : s1) = s3;
        note_best(s3, it);

        const double scale = std::max(1.0, std::abs(s3.energy));
        const double bound = opts.tol_E * scale;
        if (std::abs(s3.value) < opts.tol_A && increment < bound && std::abs(e3c.imag()) < bound) {
            EigenResult r;
            r.energy = s3.energy;
            r.residual = std::abs(s3.value);
            r.iterations = it;
            r.converged = true;
            return r;
        }
        if (increment == 0.0) {
            throw StalledSecantError("secant stalled: iterate repeated without meeting tolerance");
        }
    }
    throw NonConvergenceError("secant did not converge within max_iter", best);
}

namespace {

inline constexpr double kPoleShift = 1e-7;

MatchEvaluator make_evaluator(const PotentialSpec& p, const ContourSpec& c, MatchCondition cond) {
    return [&p, &c, cond](double e) -> MatchSample {
        try {
            return {e, matching_function(p, e, c, cond)};
        } catch (const PoleError&) {
            const double shifted = e + kPoleShift;
            return {shifted, matching_function(p, shifted, c, cond)};
        }
    };
}

} // namespace

EigenResult find_eigenvalue(const PotentialSpec& p, const ContourSpec& c, double e1, double e2,
                            const SecantOptions& opts, MatchCondition cond) {
    p.validate();
    c.validate();
    EigenResult r = secant_solve(make_evaluator(p, c, cond), e1, e2, opts);
    r.condition = cond;
    return r;
}

namespace {

struct GridSample {
    double energy = 0.0;
    double abs_a = std::numeric_limits<double>::infinity();
    double abs_b = std::numeric_limits<double>::infinity();
};

GridSample sample_point(const PotentialSpec& p, const ContourSpec& c, double e) {
    GridSample g;
    g.energy = e;
    try {
        const MatchValues mv = match_values(p, e, c);
        if (mv.log_derivative) g.abs_a = std::abs(*mv.log_derivative);
        if (mv.inverse) g.abs_b = std::abs(*mv.inverse);
    } catch (const NumericalError&) {
        // Left at +inf: never selected as a seed.
    }
    return g;
}

double grid_energy(double e_lo, double e_hi, int n, int i) {
    return e_lo + (e_hi - e_lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

struct Seed {
    double e1;
    double e2;
    MatchCondition cond;
};

std::vector<Seed> seeds_from_grid(const std::vector<GridSample>& grid) {
    std::vector<Seed> seeds;
    const int n = static_cast<int>(grid.size());
    for (const MatchCondition cond : {MatchCondition::LogDerivative, MatchCondition::InverseLogDerivative}) {
        auto val = [&](int i) { return cond == MatchCondition::LogDerivative ? grid[i].abs_a : grid[i].abs_b; };
        for (int i = 0; i < n; ++i) {
            const double v = val(i);
            if (!std::isfinite(v)) continue;
            const double left = i > 0 ? val(i - 1) : std::numeric_limits<double>::infinity();
            const double right = i + 1 < n ? val(i + 1) : std::numeric_limits<double>::infinity();
            if (!(v <= left && v < right)) continue;
            int j = left < right ? i - 1 : i + 1;
            if (j < 0 || j >= n) j = i > 0 ? i - 1 : i + 1;
            seeds.push_back({grid[i].energy, grid[j].energy, cond});
        }
    }
    return seeds;
}

std::optional<EigenResult> solve_seed(const PotentialSpec& p, const ContourSpec& c, const Seed& s,
                                      const SecantOptions& opts) {
    try {
        EigenResult r = find_eigenvalue(p, c, s.e1, s.e2, opts, s.cond);
        if (r.converged) return r;
    } catch (const NumericalError&) {
    }
    return std::nullopt;
}

ScanResult collect_levels(std::vector<std::optional<EigenResult>> roots, int n_levels, double e_lo, double e_hi,
                          double dedupe_tol) {
    std::vector<EigenResult> found;
    int failed = 0;
    for (auto& r : roots) {
        if (!r) ++failed;
        else if (r->energy >= e_lo && r->energy <= e_hi) found.push_back(*r);
    }
    std::stable_sort(found.begin(), found.end(), [](const EigenResult& a, const EigenResult& b) {
        if (a.energy != b.energy) return a.energy < b.energy;
        return a.residual < b.residual;
    });
    ScanResult out;
    for (const EigenResult& r : found) {
        if (!out.levels.empty()) {
            EigenResult& last = out.levels.back();
            if (std::abs(r.energy - last.energy) <= dedupe_tol * std::max(1.0, std::abs(r.energy))) {
                if (r.condition == MatchCondition::LogDerivative && last.condition != MatchCondition::LogDerivative)
                    last = r;
                continue;
            }
        }
        out.levels.push_back(r);
    }
    if (static_cast<int>(out.levels.size()) > n_levels) out.levels.resize(n_levels);
    for (std::size_t i = 0; i < out.levels.size(); ++i) out.levels[i].level_hint = static_cast<int>(i);
    out.partial = static_cast<int>(out.levels.size()) < n_levels;
    out.seeds = static_cast<int>(roots.size());
    out.failed_seeds = failed;
    return out;
}

void check_scan_args(const PotentialSpec& p, const ContourSpec& c, int n_levels, double e_lo, double e_hi,
                     const ScanOptions& opts) {
    p.validate();
    c.validate();
    if (n_levels < 1) throw ConfigError("scan_levels: n_levels must be >= 1");
    if (!(e_lo < e_hi)) throw ConfigError("scan_levels: need e_lo < e_hi");
    if (opts.grid_points < 3) throw ConfigError("scan_levels: grid needs at least 3 points");
}

} // namespace

ScanResult scan_levels(const PotentialSpec& p, const ContourSpec& c, int n_levels, double e_lo, double e_hi,
                       const ScanOptions& opts) {
    check_scan_args(p, c, n_levels, e_lo, e_hi, opts);
    const int n = opts.grid_points;
    const int workers = worker_count();

    std::vector<GridSample> grid(n);
#pragma omp parallel for schedule(dynamic, 4) num_threads(workers)
    for (int i = 0; i < n; ++i) grid[i] = sample_point(p, c, grid_energy(e_lo, e_hi, n, i));

    const std::vector<Seed> seeds = seeds_from_grid(grid);
    std::vector<std::optional<EigenResult>> roots(seeds.size());
    const int n_seeds = static_cast<int>(seeds.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (int i = 0; i < n_seeds; ++i) roots[i] = solve_seed(p, c, seeds[i], opts.secant);

    return collect_levels(std::move(roots), n_levels, e_lo, e_hi, opts.dedupe_tol);
}

ScanResult scan_levels_serial(const PotentialSpec& p, const ContourSpec& c, int n_levels, double e_lo,
                              double e_hi, const ScanOptions& opts) {
    check_scan_args(p, c, n_levels, e_lo, e_hi, opts);
    const int n = opts.grid_points;
    std::vector<GridSample> grid;
    grid.reserve(n);
    for (int i = 0; i < n; ++i) grid.push_back(sample_point(p, c, grid_energy(e_lo, e_hi, n, i)));

    std::vector<std::optional<EigenResult>> roots;
    for (const Seed& s : seeds_from_grid(grid)) roots.push_back(solve_seed(p, c, s, opts.secant));
    return collect_levels(std::move(roots), n_levels, e_lo, e_hi, opts.dedupe_tol);
}

namespace {

double default_lower_bound(const PotentialSpec& p, const ContourSpec& c) {
    double lowest = 0.0;
    for (const double theta : {c.theta_L, c.theta_R}) {
        const RayPotential V(p, theta);
        for (int k = 0; k <= 400; ++k) lowest = std::min(lowest, V(c.r0 * k / 400.0).real());
    }
    return lowest < 0.0 ? lowest - 1.0 : 0.0;
}

} // namespace

SpectrumResult compute_spectrum(const PotentialSpec& p, const SpectrumRequest& req) {
    p.validate();
    if (req.n_levels < 1) throw ConfigError("compute_spectrum: n_levels must be >= 1");
    SpectrumResult out;
    ContourOptions copts = req.contour;

    const ContourSpec probe = build_contour(p, req.contour_delta, ContourOptions{copts.r0.value_or(kMinAutoRadius),
                                                                                 copts.h, 0.0});
    out.e_lo = req.e_lo.value_or(default_lower_bound(p, probe));
    double e_hi = req.e_hi.value_or(out.e_lo + 4.0 * req.n_levels);
    const int max_growth = req.e_hi ? 0 : 12;
    for (int attempt = 0;; ++attempt) {
        copts.energy_ceiling = e_hi;
        out.contour = build_contour(p, req.contour_delta, copts);
        out.scan = scan_levels(p, out.contour, req.n_levels, out.e_lo, e_hi, req.scan);
        out.e_hi = e_hi;
        if (!out.scan.partial || attempt >= max_growth) break;
        // every secant run failed: a wider window will not help
        if (out.scan.seeds > 0 && out.scan.failed_seeds == out.scan.seeds) break;
        e_hi = out.e_lo + 2.0 * (e_hi - out.e_lo);
    }
    return out;
}

SpectrumResult preset_spectrum(const HamiltonianPreset& preset, int n_levels, SpectrumRequest base) {
    base.n_levels = n_levels;
    base.contour_delta = contour_delta(preset);
    return compute_spectrum(preset_to_spec(preset), base);
}

} // namespace ptspectra
