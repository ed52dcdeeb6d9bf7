#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptspectra/rk4shoot.hpp"

namespace ptspectra {

/// A reference table of energies as printed: rows are levels, columns a
/// parameter sweep. Values are kept as text so their printed precision is known.
struct PrintedTable {
    int id;
    std::string_view title;
    std::string_view column_symbol;          ///< "m" or "g"
    std::vector<std::string_view> column_labels;
    std::vector<double> column_values;
    std::vector<int> levels;
    std::vector<std::vector<std::string_view>> cells; ///< cells[row][column]
};

const PrintedTable& printed_table(int id);

/// Half a unit in the last printed digit of a decimal string.
double printed_half_ulp(std::string_view text);

struct TableCell {
    int level = 0;
    std::string column;
    double column_value = 0.0;
    double computed = 0.0;
    double printed = 0.0;
    std::string printed_text;
    double abs_dev = 0.0;
    double rel_dev = 0.0;
    bool converged = false;
    std::optional<double> oracle; ///< basis-oracle value when requested
};

struct TableDocument {
    int id = 0;
    std::string title;
    std::string method;
    std::vector<TableCell> cells; ///< row-major
    double max_abs_dev = 0.0;
    double max_rel_dev = 0.0;
    std::optional<double> max_oracle_dev;
    bool all_converged = true;
};

struct ReproduceOptions {
    SpectrumRequest spectrum{};
    bool oracle = false; ///< also run the basis oracle on Hermitian tables (3, 5)
};

/// Recomputes every cell of table `id` (1..5) and compares with the printed
/// values. Columns are computed on the OpenMP worker pool.
TableDocument reproduce_table(int id, const ReproduceOptions& opts = {});

} // namespace ptspectra
