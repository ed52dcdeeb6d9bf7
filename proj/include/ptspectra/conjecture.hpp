#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptspectra/rk4shoot.hpp"
#include "ptspectra/zdim0.hpp"

namespace ptspectra {

enum class Quantity { Partition, Energy };
enum class Verdict { Holds, Fails };
enum class Regime { Weak, Strong, Exact };

std::string_view quantity_label(Quantity q);
std::string_view verdict_label(Verdict v);
std::string_view regime_label(Regime r);

/// One comparison of a PT-phase value (lhs) with the branch average of the
/// Hermitian theory continued to -g +- i0 (rhs).
struct ConjectureReport {
    Quantity quantity = Quantity::Partition;
    std::string case_label;
    cplx lhs;
    cplx rhs;
    double abs_gap = 0.0;
    double rel_gap = 0.0;
    Verdict verdict = Verdict::Fails;
    double tolerance = 0.0;
    Regime regime = Regime::Exact;
    /// |log lhs - (log Q+ + log Q-)/2|, recorded without a verdict.
    std::optional<double> log_gap;
    /// Instanton magnitude cancelled by the branch average (weak energies).
    std::optional<double> instanton_imag;
    /// Set when a case could not be evaluated; verdict is then Fails.
    std::optional<std::string> error;
};

/// Fills gaps and verdict: holds iff |lhs - rhs| <= tol max(1, |lhs|).
ConjectureReport make_report(Quantity q, std::string label, cplx lhs, cplx rhs, double tol, Regime regime);

/// Both continued values Q(-g + i0), Q(-g - i0) of a Hermitian case.
struct BranchPair {
    cplx above;
    cplx below;
    cplx average() const { return 0.5 * (above + below); }
};

/// Z3, Z7, Z2N5 through their closed forms; Z1, Z5 by rotated quadrature.
BranchPair continued_partition(const PartitionCase& hermitian);
cplx rhs_partition(const PartitionCase& hermitian);

struct WeakRhs {
    double value;          ///< real part of the continued series
    double instanton_imag; ///< +- imaginary part that cancels in the average
};

WeakRhs rhs_energy_weak(int k, double m, double g);

/// (1/2) g^{1/3} E_herm_unit: the real branch average of (-g +- i0)^{1/3} E(1).
double rhs_energy_strong(int n, double g, double e_herm_unit);

enum class Suite { D0All, WeakEnergy, StrongEnergy, Multicomponent };

Suite parse_suite(std::string_view name);
std::string_view suite_label(Suite s);

inline constexpr double kExactTolerance = 1e-9;
inline constexpr double kQuadratureTolerance = 1e-7;
inline constexpr double kEnergyTolerance = 1e-3;
inline constexpr double kWeakRegimeThreshold = 0.05;

struct SuiteOptions {
    SpectrumRequest spectrum{}; ///< contour and secant settings for energy suites
};

/// Runs a suite in declaration order; failing cases are recorded, never thrown.
std::vector<ConjectureReport> run_report(Suite suite, const SuiteOptions& opts = {});

} // namespace ptspectra
