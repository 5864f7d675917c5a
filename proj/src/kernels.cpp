#include "maxplus/kernels.hpp"

#include "maxplus/errors.hpp"

namespace maxplus::kernels {

void mul_serial(const Trop* a, const Trop* b, Trop* out, int n, int k, int m) {
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            Trop best; // bottom
            for (int l = 0; l < k; ++l) {
                const Trop& x = a[static_cast<std::size_t>(i) * k + l];
                if (x.is_bottom()) continue;
                const Trop& y = b[static_cast<std::size_t>(l) * m + j];
                if (y.is_bottom()) continue;
                Trop cand = x + y;
                if (cand > best) best = cand;
            }
            out[static_cast<std::size_t>(i) * m + j] = best;
        }
    }
}

void mul_parallel(const Trop* a, const Trop* b, Trop* out, int n, int k, int m) {
#pragma omp parallel for collapse(2) schedule(static)
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            Trop best;
            for (int l = 0; l < k; ++l) {
                const Trop& x = a[static_cast<std::size_t>(i) * k + l];
                if (x.is_bottom()) continue;
                const Trop& y = b[static_cast<std::size_t>(l) * m + j];
                if (y.is_bottom()) continue;
                Trop cand = x + y;
                if (cand > best) best = cand;
            }
            out[static_cast<std::size_t>(i) * m + j] = best;
        }
    }
}

namespace {

const Trop kZero = Trop(0);

void check_diag_nonpositive(const Trop* d, int n) {
    for (int i = 0; i < n; ++i)
        if (d[static_cast<std::size_t>(i) * n + i] > kZero)
            throw precondition_error("positive cycle mean: star diverges");
}

void finish_diagonal(Trop* d, int n) {
    check_diag_nonpositive(d, n);
    for (int i = 0; i < n; ++i)
        d[static_cast<std::size_t>(i) * n + i] = kZero;
}

} // namespace

void star_serial(Trop* d, int n) {
    for (int k = 0; k < n; ++k) {
        if (d[static_cast<std::size_t>(k) * n + k] > kZero)
            throw precondition_error("positive cycle mean: star diverges");
        const Trop* rowk = d + static_cast<std::size_t>(k) * n;
        for (int i = 0; i < n; ++i) {
            if (i == k) continue; // row k cannot improve itself: d[k][k] <= 0
            Trop* rowi = d + static_cast<std::size_t>(i) * n;
            const Trop& dik = rowi[k];
            if (dik.is_bottom()) continue;
            for (int j = 0; j < n; ++j) {
                if (rowk[j].is_bottom()) continue;
                Trop cand = dik + rowk[j];
                if (cand > rowi[j]) rowi[j] = cand;
            }
        }
    }
    finish_diagonal(d, n);
}

void star_parallel(Trop* d, int n) {
    for (int k = 0; k < n; ++k) {
        if (d[static_cast<std::size_t>(k) * n + k] > kZero)
            throw precondition_error("positive cycle mean: star diverges");
        const Trop* rowk = d + static_cast<std::size_t>(k) * n;
        // Row k is read-only during round k (writes to it are skipped, which
        // is exact because d[k][k] <= 0), so rows can be relaxed in parallel.
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            Trop* rowi = d + static_cast<std::size_t>(i) * n;
            const Trop& dik = rowi[k];
            if (dik.is_bottom()) continue;
            for (int j = 0; j < n; ++j) {
                if (rowk[j].is_bottom()) continue;
                Trop cand = dik + rowk[j];
                if (cand > rowi[j]) rowi[j] = cand;
            }
        }
    }
    finish_diagonal(d, n);
}

} // namespace maxplus::kernels
