#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ptspectra/core.hpp"
#include "ptspectra/errors.hpp"
#include "ptspectra/stokes.hpp"

namespace ptspectra {

/// Wavefunction and radial derivative on a ray. The raw amplitude is
/// psi * exp(scale_log).
struct ShootingState {
    double r = 0.0;
    cplx psi{1.0, 0.0};
    cplx dpsi{1.0, 0.0};
    double scale_log = 0.0;
};

inline constexpr double kRenormThreshold = 1e100;

/// Integrates psi'' = e^{2i theta} (V(r e^{i theta}) - E)/a psi inward from r0 to
/// the origin with classical fixed-step RK4. The initial values at r0 default to
/// psi = psi' = 1. Throws IntegrationError on a non-finite state.
ShootingState integrate_ray(const PotentialSpec& p, double energy, double theta, double r0, double h,
                            cplx psi_init = {1.0, 0.0}, cplx dpsi_init = {1.0, 0.0});

/// Which form of the matching condition at the origin is driven to zero.
enum class MatchCondition {
    /// A(E) = e^{-i theta_L} psi_L'/psi_L - e^{-i theta_R} psi_R'/psi_R
    LogDerivative,
    /// B(E) = e^{i theta_L} psi_L/psi_L' - e^{i theta_R} psi_R/psi_R'; regular
    /// where A has poles (odd states of parity-symmetric problems).
    InverseLogDerivative,
};

const char* condition_label(MatchCondition c);

/// Both matching functions from a single pair of ray integrations. An empty
/// optional marks a pole (vanishing denominator on one side).
struct MatchValues {
    std::optional<cplx> log_derivative;
    std::optional<cplx> inverse;
};

MatchValues match_values(const PotentialSpec& p, double energy, const ContourSpec& c, double init_scale = 1.0);

/// A(E). `init_scale` multiplies both initial values on both rays, which leaves
/// A unchanged. Throws PoleError when psi_L(0) or psi_R(0) vanishes.
cplx mismatch(const PotentialSpec& p, double energy, const ContourSpec& c, double init_scale = 1.0);

cplx matching_function(const PotentialSpec& p, double energy, const ContourSpec& c, MatchCondition cond);

struct EigenResult {
    double energy = 0.0;
    double residual = 0.0;
    int iterations = 0;
    bool converged = false;
    std::optional<int> level_hint;
    MatchCondition condition = MatchCondition::LogDerivative;
};

struct SecantOptions {
    double tol_A = 1e-9;
    double tol_E = 1e-11;
    int max_iter = 100;
};

/// Secant iteration ran out of iterations; carries the best iterate seen.
class NonConvergenceError : public NumericalError {
public:
    NonConvergenceError(const std::string& what, EigenResult best) : NumericalError(what), best_(best) {}
    const EigenResult& best() const noexcept { return best_; }

private:
    EigenResult best_;
};

/// A(E1) == A(E2) exactly, so the secant update is undefined.
class StalledSecantError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// One evaluation of a matching function; `energy` may differ from the request
/// when the evaluator had to step off a pole.
struct MatchSample {
    double energy;
    cplx value;
};

using MatchEvaluator = std::function<MatchSample(double)>;

/// Secant root search E3 = (E1 A(E2) - E2 A(E1)) / (A(E2) - A(E1)), done in
/// complex arithmetic. The iterate with the larger |A| is replaced each step.
/// Converges once |A| < tol_A, the energy increment is below
/// tol_E max(1, |E|) and the discarded imaginary part of the update is below
/// the same bound.
EigenResult secant_solve(const MatchEvaluator& eval, double e1, double e2, const SecantOptions& opts = {});

EigenResult find_eigenvalue(const PotentialSpec& p, const ContourSpec& c, double e1, double e2,
                            const SecantOptions& opts = {},
                            MatchCondition cond = MatchCondition::LogDerivative);

struct ScanOptions {
    int grid_points = 400;
    SecantOptions secant{};
    double dedupe_tol = 1e-6;
};

struct ScanResult {
    std::vector<EigenResult> levels;
    bool partial = false;
    int seeds = 0;       ///< secant runs started
    int failed_seeds = 0; ///< secant runs that did not converge
};

/// Samples both matching functions on a uniform energy grid, seeds the secant
/// search at every local minimum of |A| and |B|, and returns the lowest
/// `n_levels` distinct roots in [e_lo, e_hi], ascending. Grid points and seeds
/// run on the OpenMP worker pool.
ScanResult scan_levels(const PotentialSpec& p, const ContourSpec& c, int n_levels, double e_lo, double e_hi,
                       const ScanOptions& opts = {});

/// Single-threaded reference for scan_levels; results are bit-identical.
ScanResult scan_levels_serial(const PotentialSpec& p, const ContourSpec& c, int n_levels, double e_lo,
                              double e_hi, const ScanOptions& opts = {});

/// Convenience driver: builds the contour for `delta`, and grows the upper end
/// of the scan window from an initial guess until `n_levels` roots are found.
struct SpectrumRequest {
    int n_levels = 5;
    double contour_delta = 0.0;
    ContourOptions contour{};
    ScanOptions scan{};
    std::optional<double> e_lo;
    std::optional<double> e_hi;
};

struct SpectrumResult {
    ContourSpec contour;
    ScanResult scan;
    double e_lo = 0.0;
    double e_hi = 0.0;
};

SpectrumResult compute_spectrum(const PotentialSpec& p, const SpectrumRequest& req);

/// compute_spectrum for a named Hamiltonian on its own contour; `base` supplies
/// everything except contour_delta.
SpectrumResult preset_spectrum(const HamiltonianPreset& preset, int n_levels, SpectrumRequest base = {});

} // namespace ptspectra
