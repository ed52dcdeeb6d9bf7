#include "ptspectra/conjecture.hpp"

#include <cmath>
#include <cstdio>

#include "ptspectra/errors.hpp"
#include "ptspectra/mk_series.hpp"
#include "ptspectra/parallel.hpp"
#include "ptspectra/specfun.hpp"

namespace ptspectra {

std::string_view quantity_label(Quantity q) {
    return q == Quantity::Partition ? "partition" : "energy";
}

std::string_view verdict_label(Verdict v) {
    return v == Verdict::Holds ? "holds" : "fails";
}

std::string_view regime_label(Regime r) {
    switch (r) {
    case Regime::Weak: return "weak";
    case Regime::Strong: return "strong";
    case Regime::Exact: return "exact";
    }
    return "?";
}

ConjectureReport make_report(Quantity q, std::string label, cplx lhs, cplx rhs, double tol, Regime regime) {
    ConjectureReport r;
    r.quantity = q;
    r.case_label = std::move(label);
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_gap = std::abs(lhs - rhs);
    r.rel_gap = std::abs(lhs) > 0.0 ? r.abs_gap / std::abs(lhs) : r.abs_gap;
    r.tolerance = tol;
    r.regime = regime;
    r.verdict = r.abs_gap <= tol * std::max(1.0, std::abs(lhs)) ? Verdict::Holds : Verdict::Fails;
    return r;
}

BranchPair continued_partition(const PartitionCase& c) {
    switch (c.id) {
    case PartitionId::Z3:
    case PartitionId::Z7:
    case PartitionId::Z2N5:
        return {z_closed_continued(c, BranchSide::Above), z_closed_continued(c, BranchSide::Below)};
    case PartitionId::Z1:
    case PartitionId::Z5:
        return {z_quadrature_continued(c, BranchSide::Above).value, z_quadrature_continued(c, BranchSide::Below).value};
    default:
        throw UnsupportedError("continued_partition: not a Hermitian case");
    }
}

cplx rhs_partition(const PartitionCase& c) {
    return continued_partition(c).average();
}

WeakRhs rhs_energy_weak(int k, double m, double g) {
    return {mk_energy_real(k, m, g), mk_energy_imag(k, m, g)};
}

double rhs_energy_strong(int n, double g, double e_herm_unit) {
    if (n < 0) throw DomainError("rhs_energy_strong: n must be >= 0");
    return branch_power(g, 1.0 / 3.0, BranchSide::Above).real() * e_herm_unit;
}

namespace {

struct SuiteName {
    Suite suite;
    std::string_view name;
};

constexpr SuiteName kSuites[] = {
    {Suite::D0All, "d0-all"},
    {Suite::WeakEnergy, "weak-energy"},
    {Suite::StrongEnergy, "strong-energy"},
    {Suite::Multicomponent, "multicomponent"},
};

std::string fmt_num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

std::optional<double> log_form_gap(cplx lhs, const BranchPair& b) {
    if (lhs == cplx{} || b.above == cplx{} || b.below == cplx{}) return std::nullopt;
    return std::abs(std::log(lhs) - 0.5 * (std::log(b.above) + std::log(b.below)));
}

std::string case_text(const PartitionCase& pt, const PartitionCase& herm) {
    std::string label = std::string(partition_label(pt.id)) + "/" + std::string(partition_label(herm.id));
    if (pt.id == PartitionId::Z2N6) label += " N=" + std::to_string(pt.N) + " m=" + fmt_num(pt.m);
    else if (pt.id == PartitionId::Z2 || pt.id == PartitionId::Z6) label += " m=" + fmt_num(pt.m);
    label += (pt.id == PartitionId::Z2 || pt.id == PartitionId::Z6 ? " eps=" : " g=") + fmt_num(pt.g_or_eps);
    return label;
}

ConjectureReport partition_case(const PartitionCase& pt, const PartitionCase& herm, bool by_quadrature) {
    const cplx lhs = by_quadrature ? z_quadrature(pt).value : z_closed(pt);
    const BranchPair rhs = continued_partition(herm);
    ConjectureReport r = make_report(Quantity::Partition, case_text(pt, herm), lhs, rhs.average(),
                                     by_quadrature ? kQuadratureTolerance : kExactTolerance, Regime::Exact);
    r.log_gap = log_form_gap(lhs, rhs);
    return r;
}

struct PartitionTask {
    PartitionCase pt;
    PartitionCase herm;
    bool by_quadrature;
};

void add_multicomponent(std::vector<PartitionTask>& tasks) {
    for (const int N : {1, 2, 3})
        for (const double g : {0.5, 1.0})
            tasks.push_back({{PartitionId::Z2N6, 1.0, g, N}, {PartitionId::Z2N5, 1.0, g, N}, false});
}

void add_d0(std::vector<PartitionTask>& tasks) {
    const double couplings[] = {0.5, 1.0, 4.0};
    for (const double g : couplings) tasks.push_back({{PartitionId::Z4, 1.0, g}, {PartitionId::Z3, 1.0, g}, false});
    for (const double g : couplings) tasks.push_back({{PartitionId::Z8, 1.0, g}, {PartitionId::Z7, 1.0, g}, false});
    for (const double e : couplings) tasks.push_back({{PartitionId::Z2, 1.0, e}, {PartitionId::Z1, 1.0, e}, true});
    for (const double e : couplings) tasks.push_back({{PartitionId::Z6, 1.0, e}, {PartitionId::Z5, 1.0, e}, true});
    add_multicomponent(tasks);
}

ConjectureReport failed_case(Quantity q, std::string label, Regime regime, double tol, const std::string& what) {
    ConjectureReport r;
    r.quantity = q;
    r.case_label = std::move(label);
    r.regime = regime;
    r.tolerance = tol;
    r.verdict = Verdict::Fails;
    r.error = what;
    return r;
}

std::vector<ConjectureReport> run_partition_tasks(const std::vector<PartitionTask>& tasks) {
    std::vector<ConjectureReport> out(tasks.size());
    const int n = static_cast<int>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
    for (int i = 0; i < n; ++i) {
        const PartitionTask& t = tasks[i];
        try {
            out[i] = partition_case(t.pt, t.herm, t.by_quadrature);
        } catch (const std::exception& e) {
            out[i] = failed_case(Quantity::Partition, case_text(t.pt, t.herm), Regime::Exact,
                                 t.by_quadrature ? kQuadratureTolerance : kExactTolerance, e.what());
        }
    }
    return out;
}

std::vector<ConjectureReport> weak_suite(const SuiteOptions& opts) {
    constexpr double g = 4.0;
    const double masses[] = {std::sqrt(200.0), std::sqrt(2000.0)};
    std::vector<ConjectureReport> out;
    for (const double m : masses) {
        const Regime regime = g / (m * m * m * m) <= kWeakRegimeThreshold ? Regime::Weak : Regime::Strong;
        std::optional<SpectrumResult> spec;
        std::string err;
        try {
            spec = preset_spectrum({PresetName::V2, m, g}, 7, opts.spectrum);
        } catch (const std::exception& e) {
            err = e.what();
        }
        for (const int k : {0, 2, 4, 6}) {
            std::string label = "E" + std::to_string(k) + " m^2=" + fmt_num(m * m) + " g=" + fmt_num(g);
            if (!spec || k >= static_cast<int>(spec->scan.levels.size())) {
                out.push_back(failed_case(Quantity::Energy, label, regime, kEnergyTolerance,
                                          err.empty() ? "level not found" : err));
                continue;
            }
            const WeakRhs rhs = rhs_energy_weak(k, m, g);
            ConjectureReport r = make_report(Quantity::Energy, label, spec->scan.levels[k].energy, rhs.value,
                                             kEnergyTolerance, regime);
            r.instanton_imag = rhs.instanton_imag;
            out.push_back(r);
        }
    }
    return out;
}

std::vector<ConjectureReport> strong_suite(const SuiteOptions& opts) {
    constexpr int n_levels = 5;
    const double couplings[] = {1.0, 2.0, 10.0};
    std::vector<ConjectureReport> out;
    std::optional<SpectrumResult> herm;
    std::string herm_err;
    try {
        herm = preset_spectrum({PresetName::MasslessQuartic, 1.0, 1.0}, n_levels, opts.spectrum);
    } catch (const std::exception& e) {
        herm_err = e.what();
    }
    for (const double g : couplings) {
        std::optional<SpectrumResult> pt;
        std::string err = herm_err;
        try {
            pt = preset_spectrum({PresetName::PTInverted, 1.0, g}, n_levels, opts.spectrum);
        } catch (const std::exception& e) {
            err = e.what();
        }
        for (int n = 0; n < n_levels; ++n) {
            std::string label = "E" + std::to_string(n) + " g=" + fmt_num(g);
            const bool ok = herm && pt && n < static_cast<int>(herm->scan.levels.size()) &&
                            n < static_cast<int>(pt->scan.levels.size());
            if (!ok) {
                out.push_back(failed_case(Quantity::Energy, label, Regime::Strong, kEnergyTolerance,
                                          err.empty() ? "level not found" : err));
                continue;
            }
            const double rhs = rhs_energy_strong(n, g, herm->scan.levels[n].energy);
            out.push_back(make_report(Quantity::Energy, label, pt->scan.levels[n].energy, rhs, kEnergyTolerance,
                                      Regime::Strong));
        }
    }
    return out;
}

} // namespace

Suite parse_suite(std::string_view name) {
    for (const auto& s : kSuites)
        if (s.name == name) return s.suite;
    throw ConfigError("unknown suite '" + std::string(name) + "'");
}

std::string_view suite_label(Suite s) {
    for (const auto& e : kSuites)
        if (e.suite == s) return e.name;
    return "?";
}

std::vector<ConjectureReport> run_report(Suite suite, const SuiteOptions& opts) {
    std::vector<PartitionTask> tasks;
    switch (suite) {
    case Suite::D0All:
        add_d0(tasks);
        return run_partition_tasks(tasks);
    case Suite::Multicomponent:
        add_multicomponent(tasks);
        return run_partition_tasks(tasks);
    case Suite::WeakEnergy:
        return weak_suite(opts);
    case Suite::StrongEnergy:
        return strong_suite(opts);
    }
    return {};
}

} // namespace ptspectra
