#include "ptspectra/basis_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "ptspectra/errors.hpp"
#include "ptspectra/parallel.hpp"

namespace ptspectra {

void BasisConfig::validate() const {
    if (size < 10) throw ConfigError("basis size must be >= 10");
    if (!(omega > 0.0) || !std::isfinite(omega)) throw ConfigError("basis omega must be > 0");
}

namespace {

struct Polynomial {
    double a, c1, c2, c4;
};

Polynomial as_polynomial(const PotentialSpec& p) {
    p.validate();
    Polynomial q{p.a, p.c1, p.c2, 0.0};
    if (p.delta == 0.0) {
        q.c2 += p.c4_sign * p.c4;
    } else if (p.delta == 2.0) {
        q.c4 = -p.c4_sign * p.c4; // x^2 (ix)^2 = -x^4
    } else {
        throw UnsupportedError("basis oracle: only polynomial potentials (delta 0 or 2) are supported");
    }
    if (q.c4 < 0.0) throw UnsupportedError("basis oracle: negative quartic coupling is not bounded below");
    if (q.c4 == 0.0 && q.c2 <= 0.0) throw UnsupportedError("basis oracle: potential not confining");
    return q;
}

// Powers of the position operator in the oscillator basis, built on an
// enlarged basis so the leading n x n block of X^2 and X^4 is exact.
struct PositionPowers {
    int n;
    std::vector<double> x1;  // X(i, i+1)
    DenseMatrix x2;
    DenseMatrix x4;
};

double x_elem(const std::vector<double>& x1, int i, int j) {
    if (j == i + 1) return x1[i];
    if (i == j + 1) return x1[j];
    return 0.0;
}

PositionPowers position_powers(int n, double ell) {
    const int big = n + 4;
    PositionPowers pw{n, std::vector<double>(big - 1), DenseMatrix(big), DenseMatrix(big)};
    for (int i = 0; i + 1 < big; ++i) pw.x1[i] = ell / std::sqrt(2.0) * std::sqrt(i + 1.0);
    for (int i = 0; i < big; ++i) {
        for (int j = std::max(0, i - 2); j <= std::min(big - 1, i + 2); ++j) {
            double s = 0.0;
            for (int k = std::max(0, i - 1); k <= std::min(big - 1, i + 1); ++k)
                s += x_elem(pw.x1, i, k) * x_elem(pw.x1, k, j);
            pw.x2(i, j) = s;
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = std::max(0, i - 4); j <= std::min(n - 1, i + 4); ++j) {
            double s = 0.0;
            for (int k = std::max(0, i - 2); k <= std::min(big - 1, i + 2); ++k) s += pw.x2(i, k) * pw.x2(k, j);
            pw.x4(i, j) = s;
        }
    }
    return pw;
}

void fill_row(DenseMatrix& h, const Polynomial& q, const BasisConfig& b, const PositionPowers& pw, int i) {
    const int n = b.size;
    for (int j = std::max(0, i - 4); j <= std::min(n - 1, i + 4); ++j) {
        double t = 0.0;
        if (i == j) {
            t = 0.25 * b.omega * (2.0 * i + 1.0);
        } else if (std::abs(i - j) == 2) {
            const int lo = std::min(i, j);
            t = -0.25 * b.omega * std::sqrt((lo + 1.0) * (lo + 2.0));
        }
        h(i, j) = t + q.c1 * x_elem(pw.x1, i, j) + q.c2 * pw.x2(i, j) + q.c4 * pw.x4(i, j);
    }
}

} // namespace

DenseMatrix hamiltonian_matrix(const PotentialSpec& p, const BasisConfig& b) {
    b.validate();
    const Polynomial q = as_polynomial(p);
    const PositionPowers pw = position_powers(b.size, std::sqrt(2.0 * q.a / b.omega));
    DenseMatrix h(b.size);
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (int i = 0; i < b.size; ++i) fill_row(h, q, b, pw, i);
    return h;
}

DenseMatrix hamiltonian_matrix_serial(const PotentialSpec& p, const BasisConfig& b) {
    b.validate();
    const Polynomial q = as_polynomial(p);
    const PositionPowers pw = position_powers(b.size, std::sqrt(2.0 * q.a / b.omega));
    DenseMatrix h(b.size);
    for (int i = 0; i < b.size; ++i) fill_row(h, q, b, pw, i);
    return h;
}

std::vector<double> diagonalize(DenseMatrix a) {
    const int n = a.size();
    double frob = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            frob += a(i, j) * a(i, j);
            if (j > i && std::abs(a(i, j) - a(j, i)) > 1e-12 * std::max(1.0, std::abs(a(i, j))))
                throw DomainError("diagonalize: matrix is not symmetric");
        }
    }
    const double stop = 1e-12 * std::max(1.0, std::sqrt(frob));

    auto off_norm = [&] {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
        return std::sqrt(2.0 * s);
    };

    for (int sweep = 0; sweep < 100; ++sweep) {
        if (off_norm() <= stop) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                // Off-diagonal entries negligible against both diagonals are dropped.
                const double tiny = 100.0 * std::abs(apq);
                if (sweep > 3 && std::abs(a(p, p)) + tiny == std::abs(a(p, p)) &&
                    std::abs(a(q, q)) + tiny == std::abs(a(q, q))) {
                    a(p, q) = a(q, p) = 0.0;
                    continue;
                }
                const double theta = 0.5 * (a(q, q) - a(p, p)) / apq;
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = a(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a(r, p);
                    const double arq = a(r, q);
                    const double np = arp - s * (arq + tau * arp);
                    const double nq = arq + s * (arp - tau * arq);
                    a(r, p) = a(p, r) = np;
                    a(r, q) = a(q, r) = nq;
                }
            }
        }
    }
    if (off_norm() > stop) throw NumericalError("diagonalize: Jacobi sweeps did not converge");
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = a(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

OracleResult oracle_spectrum(const PotentialSpec& p, int n_levels, const BasisConfig& b) {
    b.validate();
    if (n_levels < 1 || n_levels > b.size) throw ConfigError("oracle_spectrum: n_levels must be in [1, size]");
    const std::vector<double> coarse = diagonalize(hamiltonian_matrix(p, b));
    const BasisConfig fine{2 * b.size, b.omega};
    const std::vector<double> ev = diagonalize(hamiltonian_matrix(p, fine));

    OracleResult r;
    r.omega = b.omega;
    r.size = fine.size;
    r.levels.assign(ev.begin(), ev.begin() + n_levels);
    for (int i = 0; i < n_levels; ++i) r.max_change = std::max(r.max_change, std::abs(ev[i] - coarse[i]));
    r.converged = r.max_change < kOracleConvergence;
    return r;
}

double tuned_omega(const PotentialSpec& p) {
    double best_omega = 1.0;
    double best_e0 = 0.0;
    for (const double w : {1.0, 2.0, 3.0, 4.0}) {
        const double e0 = diagonalize(hamiltonian_matrix(p, BasisConfig{100, w})).front();
        if (w == 1.0 || e0 < best_e0) {
            best_e0 = e0;
            best_omega = w;
        }
    }
    return best_omega;
}

OracleResult oracle_spectrum(const PotentialSpec& p, int n_levels, int size) {
    return oracle_spectrum(p, n_levels, BasisConfig{size, tuned_omega(p)});
}

} // namespace ptspectra
