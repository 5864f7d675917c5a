#pragma once

#include "maxplus/scalar.hpp"

namespace maxplus::kernels {

// Dense O(n^3) inner loops, parallelized with OpenMP over independent
// output cells. Each kernel has a serial twin with identical arithmetic;
// the twins are kept as reference implementations for the tests and the
// benchmark. Exact arithmetic makes both variants bit-identical.

/// out[i][j] = max_k a[i][k] + b[k][j]; grids are row-major, out is n x m.
void mul_serial(const Trop* a, const Trop* b, Trop* out, int n, int k, int m);
void mul_parallel(const Trop* a, const Trop* b, Trop* out, int n, int k, int m);

/// In-place all-pairs maximal walk weights of an n x n grid whose maximum
/// cycle mean is <= 0; afterwards the diagonal is raised to 0. Throws
/// precondition_error when a positive-weight circuit is detected.
void star_serial(Trop* d, int n);
void star_parallel(Trop* d, int n);

/// Default entry points used by the library.
inline void mul(const Trop* a, const Trop* b, Trop* out, int n, int k, int m) {
    mul_parallel(a, b, out, n, k, m);
}
inline void star(Trop* d, int n) { star_parallel(d, n); }

} // namespace maxplus::kernels
