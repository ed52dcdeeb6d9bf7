// Serial vs OpenMP timings for the two parallel kernels. Set PTSPECTRA_THREADS
// to cap the worker count.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numbers>

#include "ptspectra/basis_oracle.hpp"
#include "ptspectra/parallel.hpp"
#include "ptspectra/rk4shoot.hpp"

using namespace ptspectra;

namespace {

template <class F>
double best_of(int reps, F&& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %8.4f s   omp %8.4f s   speedup %.2fx\n", name, serial, parallel, serial / parallel);
}

} // namespace

int main() {
    std::printf("workers: %d\n", worker_count());

    PotentialSpec pt;
    pt.c4 = 1.0;
    pt.delta = 2.0;
    const ContourSpec c{-5.0 * std::numbers::pi / 6.0, -std::numbers::pi / 6.0, 4.25, 5e-4};
    ScanOptions so;
    ScanResult a, b;
    const double s1 = best_of(2, [&] { a = scan_levels_serial(pt, c, 5, 0.0, 30.0, so); });
    const double p1 = best_of(2, [&] { b = scan_levels(pt, c, 5, 0.0, 30.0, so); });
    report("scan_levels (5 levels)", s1, p1);
    bool same = a.levels.size() == b.levels.size();
    for (std::size_t i = 0; same && i < a.levels.size(); ++i) same = a.levels[i].energy == b.levels[i].energy;
    std::printf("  identical levels: %s\n", same ? "yes" : "no");

    PotentialSpec q;
    q.c2 = 0.5;
    q.c4 = 1.0;
    q.delta = 2.0;
    q.c4_sign = -1;
    const BasisConfig bc{400, 2.0};
    DenseMatrix m1, m2;
    const double s2 = best_of(3, [&] { m1 = hamiltonian_matrix_serial(q, bc); });
    const double p2 = best_of(3, [&] { m2 = hamiltonian_matrix(q, bc); });
    report("hamiltonian_matrix (N=400)", s2, p2);
    std::printf("  identical matrices: %s\n", m1.data() == m2.data() ? "yes" : "no");
    return same && m1.data() == m2.data() ? 0 : 1;
}
