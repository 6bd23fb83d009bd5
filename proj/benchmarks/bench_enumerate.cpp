// Times the serial enumeration kernels against their OpenMP counterparts on
// a few representative classes.  Build and run:
//   cmake --build build --target bench_enumerate && ./build/benchmarks/bench_enumerate
#include <chrono>
#include <functional>
#include <iostream>

#include "geomgrid/gridclass.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace geomgrid;
using Clock = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<size_t()>& work) {
    auto t0 = Clock::now();
    size_t witness = work();
    auto t1 = Clock::now();
    // keep the result observable so the call cannot be optimised away
    static volatile size_t sink;
    sink = witness;
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const std::string& name, double serial_ms, double parallel_ms, size_t members) {
    std::cout << name << ": " << members << " members, serial " << serial_ms << " ms, parallel "
              << parallel_ms << " ms, speedup " << serial_ms / parallel_ms << "x\n";
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; parallel kernels fall back to serial\n";
#endif

    {
        GridMatrix x = GridMatrix::parse("-1 1\n1 -1");
        CellAlphabet a = encoding_alphabet(x);
        int n = 9;
        size_t members = 0;
        double s = time_ms([&] {
            members = enumerate_geom_words_serial(a, n, {}).size();
            return members;
        });
        double p = time_ms([&] { return enumerate_geom_words_parallel(a, n, {}).size(); });
        report("geom words, X matrix, n=9", s, p, members);
    }

    {
        GridMatrix x = GridMatrix::parse("-1 1\n1 -1");
        int n = 8;
        size_t members = 0;
        double s = time_ms([&] {
            members = enumerate_grid_filter_serial(x, n, {}).size();
            return members;
        });
        double p = time_ms([&] { return enumerate_grid_filter_parallel(x, n, {}).size(); });
        report("grid filter, X matrix, n=8", s, p, members);
    }

    {
        GridMatrix x = GridMatrix::parse("-1 1\n1 -1");
        int n = 9;
        size_t members = 0;
        double s = time_ms([&] {
            members = enumerate_grid_assembled_serial(x, n, {}).size();
            return members;
        });
        double p = time_ms([&] { return enumerate_grid_assembled_parallel(x, n, {}).size(); });
        report("grid assembled, X matrix, n=9", s, p, members);
    }

    {
        GridMatrix fig2 = GridMatrix::parse("0 -1 1 0\n1 -1 0 1\n0 0 0 -1");
        CellAlphabet a = encoding_alphabet(fig2);
        int n = 7;
        size_t members = 0;
        double s = time_ms([&] {
            members = enumerate_geom_words_serial(a, n, {}).size();
            return members;
        });
        double p = time_ms([&] { return enumerate_geom_words_parallel(a, n, {}).size(); });
        report("geom words, 4x3 forest, n=7", s, p, members);
    }

    return 0;
}
