#pragma once

#include <vector>

#include "ptspectra/core.hpp"

namespace ptspectra {

/// Truncated eigenbasis of the reference oscillator -a d^2/dx^2 + (omega^2/4a) x^2.
struct BasisConfig {
    int size = 100;
    double omega = 2.0;

    void validate() const;
};

/// Dense row-major square matrix.
class DenseMatrix {
public:
    explicit DenseMatrix(int n = 0) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

    int size() const { return n_; }
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<double>& data() const { return a_; }

private:
    int n_;
    std::vector<double> a_;
};

/// Matrix of -a d^2/dx^2 + c1 x + c2 x^2 + c4 x^4 in the oscillator basis.
/// Accepts real polynomial potentials: delta = 0, or delta = 2 with a
/// non-negative resulting x^4 coefficient (c4_sign = -1). Anything else,
/// including the PT deformations, throws UnsupportedError.
/// Rows are filled on the OpenMP worker pool.
DenseMatrix hamiltonian_matrix(const PotentialSpec& p, const BasisConfig& b);

/// Single-threaded reference for hamiltonian_matrix; bit-identical output.
DenseMatrix hamiltonian_matrix_serial(const PotentialSpec& p, const BasisConfig& b);

/// All eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi
/// rotations. Throws DomainError if the input is not symmetric to 1e-12.
std::vector<double> diagonalize(DenseMatrix m);

struct OracleResult {
    std::vector<double> levels;
    double omega = 0.0;
    int size = 0;              ///< basis size of the reported levels
    double max_change = 0.0;   ///< largest level shift between size/2 and size
    bool converged = false;    ///< max_change < kOracleConvergence
};

inline constexpr double kOracleConvergence = 1e-8;

/// Lowest n_levels eigenvalues at basis sizes b.size and 2 b.size; the larger
/// basis is reported, and flagged unconverged if any level moved by 1e-8 or more.
OracleResult oracle_spectrum(const PotentialSpec& p, int n_levels, const BasisConfig& b);

/// Same with omega picked from {1, 2, 3, 4} by the lowest ground state at 100
/// basis states.
OracleResult oracle_spectrum(const PotentialSpec& p, int n_levels, int size = 100);

double tuned_omega(const PotentialSpec& p);

} // namespace ptspectra
