// ptspectra command-line front end.
//
// Exit status: 0 success, 1 numerical non-convergence, 2 configuration or
// domain error (including malformed command lines).

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptspectra/basis_oracle.hpp"
#include "ptspectra/conjecture.hpp"
#include "ptspectra/core.hpp"
#include "ptspectra/errors.hpp"
#include "ptspectra/mk_series.hpp"
#include "ptspectra/rk4shoot.hpp"
#include "ptspectra/stokes.hpp"
#include "ptspectra/tables.hpp"
#include "ptspectra/zdim0.hpp"

using namespace ptspectra;
using nlohmann::json;

namespace {

enum class Format { Json, Csv, Human };

struct Args {
    std::string preset = "massless-quartic";
    std::optional<double> m;
    std::optional<double> g;
    std::optional<double> delta;
    std::optional<double> hbar;
    int levels = 5;
    std::optional<double> r0;
    std::optional<double> step;
    int table = 0;
    std::string suite = "d0-all";
    std::string case_name = "Z3";
    int N = 0;
    int k = 0;
    std::string format = "human";
    bool json_flag = false;
    bool csv_flag = false;
    bool oracle = false;
    bool quadrature = false;
    bool imag = false;
    std::string method = "simpson";
    double abs_tol = 1e-10;
    std::optional<double> tol_a;
    std::optional<double> tol_e;
    std::optional<int> max_iter;
    int samples = 65;
};

Format output_format(const Args& a) {
    if (a.json_flag) return Format::Json;
    if (a.csv_flag) return Format::Csv;
    if (a.format == "json") return Format::Json;
    if (a.format == "csv") return Format::Csv;
    return Format::Human;
}

std::string full(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string sig6(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void print_csv_row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) std::cout << (i ? "," : "") << csv_field(fields[i]);
    std::cout << "\r\n";
}

SecantOptions secant_from(const Args& a) {
    SecantOptions s;
    if (a.tol_a) s.tol_A = *a.tol_a;
    if (a.tol_e) s.tol_E = *a.tol_e;
    if (a.max_iter) s.max_iter = *a.max_iter;
    return s;
}

SpectrumRequest request_from(const Args& a) {
    SpectrumRequest r;
    r.contour.r0 = a.r0;
    r.contour.h = a.step;
    r.scan.secant = secant_from(a);
    return r;
}

HamiltonianPreset preset_from(const Args& a) {
    HamiltonianPreset p;
    p.name = parse_preset_name(a.preset);
    if (a.m) p.m = *a.m;
    if (a.g) p.g = *a.g;
    if (a.delta) p.delta = *a.delta;
    if (a.hbar) p.hbar = *a.hbar;
    return p;
}

json contour_json(const ContourSpec& c) {
    return {{"theta_l", c.theta_L}, {"theta_r", c.theta_R}, {"r0", c.r0}, {"h", c.h}};
}

int run_spectrum(const Args& a) {
    const HamiltonianPreset preset = preset_from(a);
    const SpectrumResult s = preset_spectrum(preset, a.levels, request_from(a));
    std::optional<OracleResult> oracle;
    if (a.oracle) {
        if (is_pt_phase(preset.name)) throw UnsupportedError("--oracle needs a Hermitian preset");
        oracle = oracle_spectrum(preset_to_spec(preset), a.levels);
    }
    auto oracle_at = [&](std::size_t i) -> std::optional<double> {
        if (oracle && i < oracle->levels.size()) return oracle->levels[i];
        return std::nullopt;
    };

    switch (output_format(a)) {
    case Format::Json: {
        json levels = json::array();
        for (std::size_t i = 0; i < s.scan.levels.size(); ++i) {
            const EigenResult& l = s.scan.levels[i];
            json row = {{"n", i},
                        {"energy", l.energy},
                        {"residual", l.residual},
                        {"iterations", l.iterations},
                        {"converged", l.converged},
                        {"condition", condition_label(l.condition)}};
            if (auto o = oracle_at(i)) row["oracle"] = *o;
            levels.push_back(row);
        }
        json doc = {{"preset", preset_label(preset.name)},
                    {"m", preset.m},
                    {"g", preset.g},
                    {"a", preset_to_spec(preset).a},
                    {"delta", contour_delta(preset)},
                    {"contour", contour_json(s.contour)},
                    {"e_lo", s.e_lo},
                    {"e_hi", s.e_hi},
                    {"partial", s.scan.partial},
                    {"levels", levels}};
        if (oracle) doc["oracle_converged"] = oracle->converged;
        std::cout << doc.dump(2) << "\n";
        break;
    }
    case Format::Csv: {
        std::vector<std::string> header = {"n", "energy", "residual", "iterations", "converged", "condition"};
        if (oracle) header.push_back("oracle");
        print_csv_row(header);
        for (std::size_t i = 0; i < s.scan.levels.size(); ++i) {
            const EigenResult& l = s.scan.levels[i];
            std::vector<std::string> row = {std::to_string(i), full(l.energy), full(l.residual),
                                            std::to_string(l.iterations), l.converged ? "true" : "false",
                                            condition_label(l.condition)};
            if (oracle) row.push_back(full(oracle_at(i).value_or(NAN)));
            print_csv_row(row);
        }
        break;
    }
    case Format::Human:
        std::cout << preset_label(preset.name) << "  m=" << sig6(preset.m) << " g=" << sig6(preset.g)
                  << " a=" << sig6(preset_to_spec(preset).a) << "  contour theta_L=" << sig6(s.contour.theta_L) << " theta_R=" << sig6(s.contour.theta_R)
                  << " r0=" << sig6(s.contour.r0) << " h=" << sig6(s.contour.h) << "\n";
        for (std::size_t i = 0; i < s.scan.levels.size(); ++i) {
            std::cout << "  E" << i << " = " << sig6(s.scan.levels[i].energy);
            if (auto o = oracle_at(i)) std::cout << "   (oracle " << sig6(*o) << ")";
            std::cout << "\n";
        }
        if (s.scan.partial) std::cout << "  only " << s.scan.levels.size() << " of " << a.levels << " levels found\n";
        break;
    }
    return s.scan.partial ? 1 : 0;
}

int run_partition(const Args& a) {
    PartitionCase c;
    c.id = parse_partition_id(a.case_name);
    if (a.m) c.m = *a.m;
    if (a.g) c.g_or_eps = *a.g;
    c.N = a.N;
    QuadratureSpec q;
    q.abs_tol = a.abs_tol;
    q.method = a.method == "gauss" ? QuadratureMethod::GaussAdaptive : QuadratureMethod::CompositeSimpson;

    cplx value;
    std::string method;
    double est_error = 0.0;
    if (a.quadrature) {
        const QuadratureResult r = z_quadrature(c, q);
        value = r.value;
        method = std::string(method_label(r.method));
        est_error = r.est_error;
    } else {
        value = z_closed(c);
        method = "closed-form";
        // independent quadrature of the same integral bounds the error
        est_error = std::abs(value - z_quadrature(c, q).value);
    }

    switch (output_format(a)) {
    case Format::Json: {
        json doc = {{"case", partition_label(c.id)}, {"m", c.m},           {"g_or_eps", c.g_or_eps},
                    {"N", c.N},                      {"value_re", value.real()}, {"value_im", value.imag()},
                    {"method", method},              {"est_error", est_error}};
        std::cout << doc.dump(2) << "\n";
        break;
    }
    case Format::Csv:
        print_csv_row({"case", "m", "g_or_eps", "N", "value_re", "value_im", "method", "est_error"});
        print_csv_row({std::string(partition_label(c.id)), full(c.m), full(c.g_or_eps), std::to_string(c.N),
                       full(value.real()), full(value.imag()), method, full(est_error)});
        break;
    case Format::Human:
        std::cout << partition_label(c.id) << " = " << sig6(value.real());
        if (value.imag() != 0.0) std::cout << (value.imag() < 0 ? " - " : " + ") << sig6(std::abs(value.imag())) << "i";
        std::cout << "   [" << method << ", est. error " << sig6(est_error) << "]\n";
        break;
    }
    return 0;
}

int run_mk(const Args& a) {
    const double m = a.m.value_or(1.0);
    const double g = a.g.value_or(1.0);
    const double re = mk_energy_real(a.k, m, g);
    std::optional<double> im;
    if (a.imag) im = mk_energy_imag(a.k, m, g);
    switch (output_format(a)) {
    case Format::Json: {
        json doc = {{"k", a.k}, {"m", m}, {"g", g}, {"energy_real", re}};
        if (im) doc["instanton_imag"] = *im;
        std::cout << doc.dump(2) << "\n";
        break;
    }
    case Format::Csv: {
        std::vector<std::string> h = {"k", "m", "g", "energy_real"};
        std::vector<std::string> r = {std::to_string(a.k), full(m), full(g), full(re)};
        if (im) {
            h.push_back("instanton_imag");
            r.push_back(full(*im));
        }
        print_csv_row(h);
        print_csv_row(r);
        break;
    }
    case Format::Human:
        std::cout << "E" << a.k << " real part " << sig6(re);
        if (im) std::cout << "   instanton +-" << sig6(*im);
        std::cout << "\n";
        break;
    }
    return 0;
}

json complex_json(cplx z) {
    return {{"re", z.real()}, {"im", z.imag()}};
}

int run_conjecture(const Args& a) {
    SuiteOptions opts;
    opts.spectrum = request_from(a);
    const Suite suite = parse_suite(a.suite);
    const std::vector<ConjectureReport> reports = run_report(suite, opts);
    bool any_error = false;
    for (const auto& r : reports) any_error = any_error || r.error.has_value();

    switch (output_format(a)) {
    case Format::Json: {
        json arr = json::array();
        for (const auto& r : reports) {
            json o = {{"quantity", quantity_label(r.quantity)},
                      {"case_label", r.case_label},
                      {"lhs", complex_json(r.lhs)},
                      {"rhs", complex_json(r.rhs)},
                      {"abs_gap", r.abs_gap},
                      {"rel_gap", r.rel_gap},
                      {"verdict", verdict_label(r.verdict)},
                      {"tolerance", r.tolerance},
                      {"regime", regime_label(r.regime)},
                      {"log_gap", r.log_gap ? json(*r.log_gap) : json(nullptr)},
                      {"instanton_imag", r.instanton_imag ? json(*r.instanton_imag) : json(nullptr)}};
            if (r.error) o["error"] = *r.error;
            arr.push_back(o);
        }
        std::cout << arr.dump(2) << "\n";
        break;
    }
    case Format::Csv:
        print_csv_row({"quantity", "case_label", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_gap", "rel_gap",
                       "verdict", "tolerance", "regime", "log_gap", "instanton_imag", "error"});
        for (const auto& r : reports) {
            print_csv_row({std::string(quantity_label(r.quantity)), r.case_label, full(r.lhs.real()),
                           full(r.lhs.imag()), full(r.rhs.real()), full(r.rhs.imag()), full(r.abs_gap),
                           full(r.rel_gap), std::string(verdict_label(r.verdict)), full(r.tolerance),
                           std::string(regime_label(r.regime)), r.log_gap ? full(*r.log_gap) : "",
                           r.instanton_imag ? full(*r.instanton_imag) : "", r.error.value_or("")});
        }
        break;
    case Format::Human:
        std::cout << "suite " << suite_label(suite) << "\n";
        for (const auto& r : reports) {
            std::printf("  %-28s lhs %-12s rhs %-12s gap %-10s %s", r.case_label.c_str(), sig6(r.lhs.real()).c_str(),
                        sig6(r.rhs.real()).c_str(), sig6(r.abs_gap).c_str(),
                        std::string(verdict_label(r.verdict)).c_str());
            if (r.error) std::printf("  (%s)", r.error->c_str());
            std::printf("\n");
        }
        break;
    }
    return any_error ? 1 : 0;
}

int run_contour(const Args& a) {
    const HamiltonianPreset preset = preset_from(a);
    const double delta = a.delta.value_or(contour_delta(preset));
    const WedgeAngles w = wedge_angles(delta);
    ContourOptions opts;
    opts.r0 = a.r0;
    opts.h = a.step;
    const ContourSpec c = build_contour(preset_to_spec(preset), delta, opts);
    const auto left = ray_polyline(c, c.theta_L, a.samples);
    const auto right = ray_polyline(c, c.theta_R, a.samples);

    switch (output_format(a)) {
    case Format::Json: {
        auto pts = [](const std::vector<ContourPoint>& v) {
            json arr = json::array();
            for (const auto& p : v) arr.push_back({p.re, p.im});
            return arr;
        };
        json doc = contour_json(c);
        doc["delta"] = delta;
        doc["opening"] = w.opening;
        doc["left"] = pts(left);
        doc["right"] = pts(right);
        std::cout << doc.dump(2) << "\n";
        break;
    }
    case Format::Csv:
        print_csv_row({"ray", "index", "re", "im"});
        for (std::size_t i = 0; i < left.size(); ++i)
            print_csv_row({"left", std::to_string(i), full(left[i].re), full(left[i].im)});
        for (std::size_t i = 0; i < right.size(); ++i)
            print_csv_row({"right", std::to_string(i), full(right[i].re), full(right[i].im)});
        break;
    case Format::Human:
        std::cout << "delta=" << sig6(delta) << " theta_L=" << sig6(c.theta_L) << " theta_R=" << sig6(c.theta_R)
                  << " opening=" << sig6(w.opening) << " r0=" << sig6(c.r0) << " h=" << sig6(c.h) << "\n";
        break;
    }
    return 0;
}

int run_reproduce(const Args& a) {
    ReproduceOptions opts;
    opts.spectrum = request_from(a);
    opts.oracle = a.oracle;
    const TableDocument doc = reproduce_table(a.table, opts);

    switch (output_format(a)) {
    case Format::Json: {
        json cells = json::array();
        for (const auto& c : doc.cells) {
            json o = {{"level", c.level},       {"column", c.column},         {"column_value", c.column_value},
                      {"computed", c.computed}, {"printed", c.printed_text}, {"abs_dev", c.abs_dev},
                      {"rel_dev", c.rel_dev},   {"converged", c.converged}};
            if (c.oracle) o["oracle"] = *c.oracle;
            cells.push_back(o);
        }
        json out = {{"table", doc.id},
                    {"title", doc.title},
                    {"method", doc.method},
                    {"max_abs_dev", doc.max_abs_dev},
                    {"max_rel_dev", doc.max_rel_dev},
                    {"all_converged", doc.all_converged},
                    {"cells", cells}};
        if (doc.max_oracle_dev) out["max_oracle_dev"] = *doc.max_oracle_dev;
        std::cout << out.dump(2) << "\n";
        break;
    }
    case Format::Csv: {
        std::vector<std::string> h = {"level", "column", "column_value", "computed", "printed", "abs_dev",
                                      "rel_dev", "converged"};
        if (opts.oracle) h.push_back("oracle");
        print_csv_row(h);
        for (const auto& c : doc.cells) {
            std::vector<std::string> r = {std::to_string(c.level), c.column,        full(c.column_value),
                                          full(c.computed),        c.printed_text,  full(c.abs_dev),
                                          full(c.rel_dev),         c.converged ? "true" : "false"};
            if (opts.oracle) r.push_back(c.oracle ? full(*c.oracle) : "");
            print_csv_row(r);
        }
        break;
    }
    case Format::Human:
        std::cout << "table " << doc.id << ": " << doc.title << " [" << doc.method << "]\n";
        for (const auto& c : doc.cells) {
            std::printf("  E%d %-10s computed %-12s printed %-12s |d| %s%s\n", c.level, c.column.c_str(),
                        sig6(c.computed).c_str(), c.printed_text.c_str(), sig6(c.abs_dev).c_str(),
                        c.converged ? "" : "  NOT CONVERGED");
        }
        std::cout << "  max |d| " << sig6(doc.max_abs_dev) << ", max relative " << sig6(doc.max_rel_dev) << "\n";
        if (doc.max_oracle_dev) std::cout << "  max |shooting - oracle| " << sig6(*doc.max_oracle_dev) << "\n";
        break;
    }
    return doc.all_converged ? 0 : 1;
}

void add_format(CLI::App* cmd, Args& a) {
    cmd->add_option("--format", a.format, "json, csv or human")->check(CLI::IsMember({"json", "csv", "human"}));
    cmd->add_flag("--json", a.json_flag, "same as --format json");
    cmd->add_flag("--csv", a.csv_flag, "same as --format csv");
}

void add_hamiltonian(CLI::App* cmd, Args& a) {
    cmd->add_option("--preset", a.preset, "v1..v6, massive-ao, massless-quartic, pt-inverted, anomaly");
    cmd->add_option("--m", a.m, "mass parameter")->check(CLI::PositiveNumber);
    cmd->add_option("--g", a.g, "quartic coupling")->check(CLI::PositiveNumber);
    cmd->add_option("--delta", a.delta, "deformation exponent")->check(CLI::NonNegativeNumber);
    cmd->add_option("--hbar", a.hbar, "hbar for the massless presets")->check(CLI::PositiveNumber);
    cmd->add_option("--r0", a.r0, "contour radius (default: WKB sizing)")->check(CLI::PositiveNumber);
    cmd->add_option("--step", a.step, "RK4 radial step")->check(CLI::PositiveNumber);
}

void add_solver(CLI::App* cmd, Args& a) {
    cmd->add_option("--tol-a", a.tol_a, "secant residual tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--tol-e", a.tol_e, "secant relative energy tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--max-iter", a.max_iter, "secant iteration cap")->check(CLI::Range(1, 100000));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectra and partition functions of Hermitian and PT-symmetric anharmonic oscillators"};
    app.require_subcommand(1);
    Args a;

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of a preset Hamiltonian");
    add_hamiltonian(spectrum, a);
    add_solver(spectrum, a);
    add_format(spectrum, a);
    spectrum->add_option("--levels", a.levels, "number of levels")->check(CLI::Range(1, 200));
    spectrum->add_flag("--oracle", a.oracle, "cross-check with the oscillator-basis oracle");

    auto* partition = app.add_subcommand("partition", "zero-dimensional partition functions");
    partition->add_option("--case", a.case_name, "Z1..Z8, Z2N5, Z2N6");
    partition->add_option("--m", a.m, "mass parameter")->check(CLI::NonNegativeNumber);
    partition->add_option("--g", a.g, "coupling (eps for Z1, Z2, Z5, Z6)")->check(CLI::PositiveNumber);
    partition->add_option("--N", a.N, "multi-component index")->check(CLI::NonNegativeNumber);
    partition->add_flag("--quadrature", a.quadrature, "integrate the contour instead of the closed form");
    partition->add_option("--method", a.method, "simpson or gauss")->check(CLI::IsMember({"simpson", "gauss"}));
    partition->add_option("--tol", a.abs_tol, "absolute quadrature tolerance")->check(CLI::PositiveNumber);
    add_format(partition, a);

    auto* mk = app.add_subcommand("mk", "truncated weak-coupling series");
    mk->add_option("--k", a.k, "level index")->check(CLI::NonNegativeNumber);
    mk->add_option("--m", a.m, "mass")->check(CLI::PositiveNumber);
    mk->add_option("--g", a.g, "coupling")->check(CLI::NonNegativeNumber);
    mk->add_flag("--imag", a.imag, "also print the instanton magnitude");
    add_format(mk, a);

    auto* conj = app.add_subcommand("conjecture", "branch-average comparisons");
    conj->add_option("--suite", a.suite, "d0-all, weak-energy, strong-energy, multicomponent")
        ->check(CLI::IsMember({"d0-all", "weak-energy", "strong-energy", "multicomponent"}));
    conj->add_option("--r0", a.r0, "contour radius")->check(CLI::PositiveNumber);
    conj->add_option("--step", a.step, "RK4 radial step")->check(CLI::PositiveNumber);
    add_solver(conj, a);
    add_format(conj, a);

    auto* contour = app.add_subcommand("contour", "Stokes-wedge rays used for shooting");
    add_hamiltonian(contour, a);
    contour->add_option("--samples", a.samples, "points per ray")->check(CLI::Range(2, 100000));
    add_format(contour, a);

    auto* reproduce = app.add_subcommand("reproduce", "recompute a reference table");
    reproduce->add_option("--table", a.table, "table id 1..5")->required()->check(CLI::Range(1, 5));
    reproduce->add_flag("--oracle", a.oracle, "add basis-oracle values (tables 3 and 5)");
    reproduce->add_option("--r0", a.r0, "contour radius")->check(CLI::PositiveNumber);
    reproduce->add_option("--step", a.step, "RK4 radial step")->check(CLI::PositiveNumber);
    add_solver(reproduce, a);
    add_format(reproduce, a);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*spectrum) return run_spectrum(a);
        if (*partition) return run_partition(a);
        if (*mk) return run_mk(a);
        if (*conj) return run_conjecture(a);
        if (*contour) return run_contour(a);
        if (*reproduce) return run_reproduce(a);
    } catch (const NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
