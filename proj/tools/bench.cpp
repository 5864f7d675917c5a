// Benchmark comparing the OpenMP kernels against their serial reference
// twins, plus the end-to-end ultimate-rank pipeline built on them.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "maxplus/kernels.hpp"
#include "maxplus/matrix.hpp"
#include "maxplus/ultimate.hpp"

using namespace maxplus;
using Clock = std::chrono::steady_clock;

namespace {

Matrix random_dense(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-9, 9);
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Trop(entry(rng));
    return m;
}

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void bench_mul(int n, std::mt19937_64& rng) {
    Matrix a = random_dense(n, rng), b = random_dense(n, rng);
    Matrix out_s(n, n), out_p(n, n);

    auto t0 = Clock::now();
    kernels::mul_serial(a.data(), b.data(), out_s.data(), n, n, n);
    double serial = ms_since(t0);

    t0 = Clock::now();
    kernels::mul_parallel(a.data(), b.data(), out_p.data(), n, n, n);
    double parallel = ms_since(t0);

    std::cout << "mul    n=" << n << "  serial " << serial << " ms,  parallel "
              << parallel << " ms,  match " << (out_s == out_p ? "yes" : "NO") << '\n';
}

void bench_star(int n, std::mt19937_64& rng) {
    Matrix base = random_dense(n, rng);
    // shift every entry below zero so the star converges
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) base(i, j) = base(i, j) - Rat(10);

    Matrix d_s = base, d_p = base;
    auto t0 = Clock::now();
    kernels::star_serial(d_s.data(), n);
    double serial = ms_since(t0);

    t0 = Clock::now();
    kernels::star_parallel(d_p.data(), n);
    double parallel = ms_since(t0);

    std::cout << "star   n=" << n << "  serial " << serial << " ms,  parallel "
              << parallel << " ms,  match " << (d_s == d_p ? "yes" : "NO") << '\n';
}

void bench_urank(int n, std::mt19937_64& rng) {
    Matrix a = random_dense(n, rng);
    auto t0 = Clock::now();
    UltimateRankResult r = ultimate_rank(a);
    double total = ms_since(t0);
    std::cout << "urank  n=" << n << "  " << total << " ms  (value " << r.value
              << ")\n";
}

} // namespace

int main(int argc, char** argv) {
    std::vector<int> sizes{64, 128, 200};
    if (argc > 1) {
        sizes.clear();
        for (int i = 1; i < argc; ++i) sizes.push_back(std::atoi(argv[i]));
    }
#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << '\n';
#else
    std::cout << "OpenMP not enabled\n";
#endif
    std::mt19937_64 rng(0xbe5c0ull);
    for (int n : sizes) {
        bench_mul(n, rng);
        bench_star(n, rng);
        bench_urank(n, rng);
    }
    return 0;
}
