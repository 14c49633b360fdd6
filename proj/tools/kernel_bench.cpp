// Times the OpenMP kernels against their serial reference implementations on
// generated trees and checks the results agree exactly. Exit code 0 when all
// comparisons match, 1 otherwise.
//
//   kernel_bench [MAX_N]   (default 512: sizes 64, 256, 512)

#include "heintree/complexity.hpp"
#include "heintree/distance_matrix.hpp"
#include "heintree/generators.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <initializer_list>

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double best_ms(F&& f, int reps = 3) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        f();
        const auto t1 = Clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void print_row(const char* kernel, int n, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-22s %6d %12.3f %12.3f %8.2fx %6s\n", kernel, n, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, equal ? "yes" : "NO");
}

} // namespace

int main(int argc, char** argv) {
    const int max_n = argc > 1 ? std::atoi(argv[1]) : 512;
    if (max_n < 2) {
        std::fprintf(stderr, "usage: kernel_bench [MAX_N >= 2]\n");
        return 2;
    }

    std::printf("threads=%d\n", omp_get_max_threads());
    std::printf("%-22s %6s %12s %12s %9s %6s\n", "kernel", "n", "serial_ms", "parallel_ms",
                "speedup", "equal");

    bool all_equal = true;
    for (const int n : {64, 256, 512}) {
        if (n > max_n) break;
        const hein::WeightedTree t = hein::make_random(n, 3, 42);

        hein::DistanceMatrix m_serial, m_parallel;
        const double dm_s = best_ms([&] { m_serial = hein::distance_matrix_serial(t); });
        const double dm_p = best_ms([&] { m_parallel = hein::distance_matrix(t); });
        const bool dm_eq = m_serial == m_parallel;
        all_equal = all_equal && dm_eq;
        print_row("distance_matrix", n, dm_s, dm_p, dm_eq);

        hein::UnrootedComplexity c_serial, c_parallel;
        const double uc_s = best_ms([&] { c_serial = hein::unrooted_complexity_serial(t); });
        const double uc_p = best_ms([&] { c_parallel = hein::unrooted_complexity(t); });
        const bool uc_eq = c_serial.value == c_parallel.value &&
                           c_serial.argmin_edge == c_parallel.argmin_edge &&
                           c_serial.per_edge == c_parallel.per_edge;
        all_equal = all_equal && uc_eq;
        print_row("unrooted_complexity", n, uc_s, uc_p, uc_eq);
    }

    if (!all_equal) std::fprintf(stderr, "kernel mismatch: parallel != serial\n");
    return all_equal ? 0 : 1;
}
