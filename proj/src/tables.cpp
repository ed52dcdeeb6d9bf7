#include "ptspectra/tables.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "ptspectra/basis_oracle.hpp"
#include "ptspectra/errors.hpp"
#include "ptspectra/mk_series.hpp"
#include "ptspectra/parallel.hpp"

namespace ptspectra {

double printed_half_ulp(std::string_view text) {
    const auto dot = text.find('.');
    const int decimals = dot == std::string_view::npos ? 0 : static_cast<int>(text.size() - dot - 1);
    return 0.5 * std::pow(10.0, -decimals);
}

namespace {

double parse_printed(std::string_view text) {
    const std::string s(text);
    return std::strtod(s.c_str(), nullptr);
}

const char* method_for(int id) {
    switch (id) {
    case 1: return "mk_series";
    case 2: return "rk4shoot PT contour (V2)";
    case 3: return "rk4shoot real axis";
    case 4: return "rk4shoot PT contour";
    default: return "rk4shoot real axis (anomaly preset)";
    }
}

HamiltonianPreset preset_for(int id, double column_value) {
    switch (id) {
    case 2: return {PresetName::V2, column_value, 4.0};
    case 3: return {PresetName::MasslessQuartic, 1.0, column_value};
    case 4: return {PresetName::PTInverted, 1.0, column_value};
    default: return {PresetName::Anomaly, 1.0, column_value};
    }
}

struct ColumnResult {
    std::vector<double> values;
    std::vector<bool> ok;
    std::vector<std::optional<double>> oracle;
};

ColumnResult compute_column(int id, const PrintedTable& t, std::size_t col, const ReproduceOptions& opts) {
    const std::size_t rows = t.levels.size();
    ColumnResult r{std::vector<double>(rows, std::numeric_limits<double>::quiet_NaN()),
                   std::vector<bool>(rows, false), std::vector<std::optional<double>>(rows)};
    const double param = t.column_values[col];
    if (id == 1) {
        for (std::size_t i = 0; i < rows; ++i) {
            r.values[i] = mk_energy_real(t.levels[i], param, 4.0);
            r.ok[i] = true;
        }
        return r;
    }
    const int needed = t.levels.back() + 1;
    const HamiltonianPreset preset = preset_for(id, param);
    try {
        const SpectrumResult s = preset_spectrum(preset, needed, opts.spectrum);
        for (std::size_t i = 0; i < rows; ++i) {
            const int lvl = t.levels[i];
            if (lvl < static_cast<int>(s.scan.levels.size())) {
                r.values[i] = s.scan.levels[lvl].energy;
                r.ok[i] = s.scan.levels[lvl].converged;
            }
        }
    } catch (const Error&) {
        // cells stay flagged
    }
    if (opts.oracle && (id == 3 || id == 5)) {
        const OracleResult o = oracle_spectrum(preset_to_spec(preset), needed);
        for (std::size_t i = 0; i < rows; ++i) r.oracle[i] = o.levels[t.levels[i]];
    }
    return r;
}

} // namespace

TableDocument reproduce_table(int id, const ReproduceOptions& opts) {
    const PrintedTable& t = printed_table(id);
    const std::size_t ncol = t.column_values.size();
    std::vector<ColumnResult> cols(ncol);
    const int n = static_cast<int>(ncol);
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
    for (int c = 0; c < n; ++c) cols[c] = compute_column(id, t, c, opts);

    TableDocument doc;
    doc.id = id;
    doc.title = t.title;
    doc.method = method_for(id);
    for (std::size_t row = 0; row < t.levels.size(); ++row) {
        for (std::size_t c = 0; c < ncol; ++c) {
            TableCell cell;
            cell.level = t.levels[row];
            cell.column = std::string(t.column_symbol) + "=" + std::string(t.column_labels[c]);
            cell.column_value = t.column_values[c];
            cell.printed_text = t.cells[row][c];
            cell.printed = parse_printed(cell.printed_text);
            cell.computed = cols[c].values[row];
            cell.converged = cols[c].ok[row];
            cell.oracle = cols[c].oracle[row];
            cell.abs_dev = std::abs(cell.computed - cell.printed);
            cell.rel_dev = cell.abs_dev / std::abs(cell.printed);
            if (cell.converged) {
                doc.max_abs_dev = std::max(doc.max_abs_dev, cell.abs_dev);
                doc.max_rel_dev = std::max(doc.max_rel_dev, cell.rel_dev);
            } else {
                doc.all_converged = false;
            }
            if (cell.oracle) {
                const double d = std::abs(*cell.oracle - cell.computed);
                doc.max_oracle_dev = std::max(doc.max_oracle_dev.value_or(0.0), d);
            }
            doc.cells.push_back(std::move(cell));
        }
    }
    return doc;
}

} // namespace ptspectra
