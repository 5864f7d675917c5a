#include "maxplus/ranks.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <stdexcept>

#include "maxplus/errors.hpp"

namespace maxplus {

namespace {

// Shortest-augmenting-path assignment on minimization costs c_ij = -A_ij
// with bottom entries forbidden. Exact rational potentials throughout.
// Returns false when no permutation avoids the forbidden cells.
struct Assignment {
    bool feasible = false;
    std::vector<int> row_of_col; // 1-based; row matched to column j
    std::vector<Rat> u, v;       // 1-based potentials, minimization sense
};

Assignment solve_assignment(const Matrix& a) {
    const int n = a.rows();
    Assignment out;
    out.u.assign(static_cast<std::size_t>(n) + 1, Rat(0));
    out.v.assign(static_cast<std::size_t>(n) + 1, Rat(0));
    std::vector<int> p(static_cast<std::size_t>(n) + 1, 0), way(static_cast<std::size_t>(n) + 1, 0);
    auto& u = out.u;
    auto& v = out.v;

    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<std::optional<Rat>> minv(static_cast<std::size_t>(n) + 1); // nullopt = +inf
        std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
        do {
            used[static_cast<std::size_t>(j0)] = true;
            int i0 = p[static_cast<std::size_t>(j0)];
            int j1 = -1;
            std::optional<Rat> delta;
            for (int j = 1; j <= n; ++j) {
                if (used[static_cast<std::size_t>(j)]) continue;
                const Trop& entry = a(i0 - 1, j - 1);
                if (entry.is_finite()) {
                    Rat cur = -entry.rat() - u[static_cast<std::size_t>(i0)] -
                              v[static_cast<std::size_t>(j)];
                    auto& slot = minv[static_cast<std::size_t>(j)];
                    if (!slot || cur < *slot) {
                        slot = std::move(cur);
                        way[static_cast<std::size_t>(j)] = j0;
                    }
                }
                auto& slot = minv[static_cast<std::size_t>(j)];
                if (slot && (!delta || *slot < *delta)) {
                    delta = *slot;
                    j1 = j;
                }
            }
            if (!delta) return out; // remaining columns unreachable
            for (int j = 0; j <= n; ++j) {
                if (used[static_cast<std::size_t>(j)]) {
                    u[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] += *delta;
                    v[static_cast<std::size_t>(j)] -= *delta;
                } else if (minv[static_cast<std::size_t>(j)]) {
                    *minv[static_cast<std::size_t>(j)] -= *delta;
                }
            }
            j0 = j1;
        } while (p[static_cast<std::size_t>(j0)] != 0);
        do {
            int j1 = way[static_cast<std::size_t>(j0)];
            p[static_cast<std::size_t>(j0)] = p[static_cast<std::size_t>(j1)];
            j0 = j1;
        } while (j0);
    }
    out.feasible = true;
    out.row_of_col = std::move(p);
    return out;
}

// A bipartite graph that has a perfect matching has a unique one iff
// repeatedly deleting degree-1 vertices together with their forced edge
// (and the partner's other edges) empties the graph.
bool unique_perfect_matching(int n, const std::vector<std::vector<int>>& row_adj,
                             const std::vector<std::vector<int>>& col_adj) {
    std::vector<int> deg_row(static_cast<std::size_t>(n)), deg_col(static_cast<std::size_t>(n));
    std::vector<bool> dead_row(static_cast<std::size_t>(n), false),
        dead_col(static_cast<std::size_t>(n), false);
    std::deque<std::pair<bool, int>> queue; // (is_row, index)
    for (int i = 0; i < n; ++i) {
        deg_row[static_cast<std::size_t>(i)] = static_cast<int>(row_adj[static_cast<std::size_t>(i)].size());
        deg_col[static_cast<std::size_t>(i)] = static_cast<int>(col_adj[static_cast<std::size_t>(i)].size());
        if (deg_row[static_cast<std::size_t>(i)] == 1) queue.emplace_back(true, i);
        if (deg_col[static_cast<std::size_t>(i)] == 1) queue.emplace_back(false, i);
    }

    int removed = 0;
    auto drop_row = [&](int r) {
        dead_row[static_cast<std::size_t>(r)] = true;
        ++removed;
        for (int c : row_adj[static_cast<std::size_t>(r)]) {
            if (dead_col[static_cast<std::size_t>(c)]) continue;
            if (--deg_col[static_cast<std::size_t>(c)] == 1) queue.emplace_back(false, c);
        }
    };
    auto drop_col = [&](int c) {
        dead_col[static_cast<std::size_t>(c)] = true;
        ++removed;
        for (int r : col_adj[static_cast<std::size_t>(c)]) {
            if (dead_row[static_cast<std::size_t>(r)]) continue;
            if (--deg_row[static_cast<std::size_t>(r)] == 1) queue.emplace_back(true, r);
        }
    };

    while (!queue.empty()) {
        auto [is_row, idx] = queue.front();
        queue.pop_front();
        if (is_row) {
            if (dead_row[static_cast<std::size_t>(idx)] ||
                deg_row[static_cast<std::size_t>(idx)] != 1)
                continue;
            int partner = -1;
            for (int c : row_adj[static_cast<std::size_t>(idx)])
                if (!dead_col[static_cast<std::size_t>(c)]) partner = c;
            if (partner < 0) throw std::logic_error("matching peel lost an endpoint");
            drop_row(idx);
            drop_col(partner);
        } else {
            if (dead_col[static_cast<std::size_t>(idx)] ||
                deg_col[static_cast<std::size_t>(idx)] != 1)
                continue;
            int partner = -1;
            for (int r : col_adj[static_cast<std::size_t>(idx)])
                if (!dead_row[static_cast<std::size_t>(r)]) partner = r;
            if (partner < 0) throw std::logic_error("matching peel lost an endpoint");
            drop_col(idx);
            drop_row(partner);
        }
    }
    return removed == 2 * n;
}

} // namespace

PermanentCertificate permanent(const Matrix& a) {
    if (!a.is_square())
        throw precondition_error("permanent: matrix must be square");
    const int n = a.rows();

    PermanentCertificate cert;
    Assignment sol = solve_assignment(a);
    if (!sol.feasible) {
        // every permutation hits a bottom entry; all of them tie at -inf
        cert.permanent = Trop::bottom();
        cert.singular = true;
        return cert;
    }

    std::vector<int> tau(static_cast<std::size_t>(n));
    Trop per = Trop(0);
    for (int j = 1; j <= n; ++j) {
        int i = sol.row_of_col[static_cast<std::size_t>(j)];
        tau[static_cast<std::size_t>(i) - 1] = j - 1;
    }
    for (int i = 0; i < n; ++i) per += a(i, tau[static_cast<std::size_t>(i)]);
    cert.permanent = per;

    Vector up(n), vp(n);
    for (int i = 0; i < n; ++i) up[i] = Trop(-sol.u[static_cast<std::size_t>(i) + 1]);
    for (int j = 0; j < n; ++j) vp[j] = Trop(-sol.v[static_cast<std::size_t>(j) + 1]);

    // equality subgraph of the duals: tight finite cells
    std::vector<std::vector<int>> row_adj(static_cast<std::size_t>(n)),
        col_adj(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Trop& entry = a(i, j);
            if (!entry.is_finite()) continue;
            if (entry.rat() == up[i].rat() + vp[j].rat()) {
                row_adj[static_cast<std::size_t>(i)].push_back(j);
                col_adj[static_cast<std::size_t>(j)].push_back(i);
            }
        }
    cert.singular = !unique_perfect_matching(n, row_adj, col_adj);
    if (!cert.singular) cert.tau = std::move(tau);
    cert.row_potential = std::move(up);
    cert.col_potential = std::move(vp);
    return cert;
}

bool is_nonsingular(const Matrix& a) { return !permanent(a).singular; }

namespace {

std::vector<std::vector<int>> combinations(int n, int r) {
    std::vector<std::vector<int>> all;
    std::vector<int> c(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) c[static_cast<std::size_t>(i)] = i;
    while (true) {
        all.push_back(c);
        int i = r - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - r + i) --i;
        if (i < 0) break;
        ++c[static_cast<std::size_t>(i)];
        for (int k = i + 1; k < r; ++k)
            c[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k) - 1] + 1;
    }
    return all;
}

Matrix submatrix(const Matrix& a, const std::vector<int>& rows,
                 const std::vector<int>& cols) {
    Matrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            s(static_cast<int>(i), static_cast<int>(j)) = a(rows[i], cols[j]);
    return s;
}

// det+ / det- of a small square matrix via Heap's permutation enumeration;
// each swap toggles the parity.
std::pair<Trop, Trop> signed_dets(const Matrix& b) {
    const int k = b.rows();
    std::vector<int> perm(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = i;
    Trop best_even, best_odd;
    bool odd = false;

    auto weigh = [&]() {
        Trop w = Trop(0);
        for (int i = 0; i < k && w.is_finite(); ++i)
            w += b(i, perm[static_cast<std::size_t>(i)]);
        Trop& slot = odd ? best_odd : best_even;
        if (w > slot) slot = w;
    };

    weigh();
    std::vector<int> c(static_cast<std::size_t>(k), 0);
    int i = 1;
    while (i < k) {
        if (c[static_cast<std::size_t>(i)] < i) {
            if (i % 2 == 0)
                std::swap(perm[0], perm[static_cast<std::size_t>(i)]);
            else
                std::swap(perm[static_cast<std::size_t>(c[static_cast<std::size_t>(i)])],
                          perm[static_cast<std::size_t>(i)]);
            odd = !odd;
            weigh();
            ++c[static_cast<std::size_t>(i)];
            i = 1;
        } else {
            c[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
    }
    return {best_even, best_odd};
}

double binomial(int n, int r) {
    double b = 1;
    for (int i = 0; i < r; ++i) b *= static_cast<double>(n - i) / (i + 1);
    return b;
}

// Shared scaffolding for the two brute-force ranks: descending submatrix
// sizes, parallel scan over row choices, early exit once a size succeeds.
template <typename Pred>
std::optional<int> brute_rank(const Matrix& a, int cap, Pred witness) {
    const int mindim = std::min(a.rows(), a.cols());
    if (mindim > cap) return std::nullopt;
    // enumeration over the larger side can still blow up; refuse as well
    for (int r = 1; r <= mindim; ++r)
        if (binomial(a.rows(), r) * binomial(a.cols(), r) > 2e7) return std::nullopt;
    for (int r = mindim; r >= 1; --r) {
        auto row_sets = combinations(a.rows(), r);
        auto col_sets = combinations(a.cols(), r);
        std::atomic<bool> found{false};
        const std::int64_t total = static_cast<std::int64_t>(row_sets.size());
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t ri = 0; ri < total; ++ri) {
            if (found.load(std::memory_order_relaxed)) continue;
            for (const auto& cs : col_sets) {
                if (found.load(std::memory_order_relaxed)) break;
                if (witness(submatrix(a, row_sets[static_cast<std::size_t>(ri)], cs)))
                    found.store(true, std::memory_order_relaxed);
            }
        }
        if (found.load()) return r;
    }
    return 0;
}

} // namespace

std::optional<int> tropical_rank_bruteforce(const Matrix& a, int cap) {
    return brute_rank(a, cap, [](const Matrix& s) { return is_nonsingular(s); });
}

std::optional<int> symmetrized_rank_bruteforce(const Matrix& a, int cap) {
    return brute_rank(a, cap, [](const Matrix& s) {
        auto [even, od] = signed_dets(s);
        return !(even == od);
    });
}

namespace {

// Residuation scalar: bottom / finite / top. Top appears only here, in the
// redundancy test of the column rank.
struct Resid {
    int cls; // -1 bottom, 0 finite, +1 top
    Rat v;
};

Resid resid_sub(const Trop& c, const Trop& a) {
    if (a.is_bottom()) return {+1, Rat(0)};
    if (c.is_bottom()) return {-1, Rat(0)};
    return {0, c.rat() - a.rat()};
}

bool resid_less(const Resid& x, const Resid& y) {
    if (x.cls != y.cls) return x.cls < y.cls;
    return x.cls == 0 && x.v < y.v;
}

// c redundant iff recombining the other columns with the residuated
// coefficients reproduces it exactly.
bool column_redundant(const std::vector<Vector>& others, const Vector& c) {
    if (others.empty()) return false;
    const int n = c.size();
    std::vector<Resid> lambda;
    lambda.reserve(others.size());
    for (const Vector& col : others) {
        Resid lo{+1, Rat(0)};
        for (int i = 0; i < n; ++i) {
            Resid cand = resid_sub(c[i], col[i]);
            if (resid_less(cand, lo)) lo = cand;
        }
        lambda.push_back(lo);
    }
    Vector y(n);
    for (int i = 0; i < n; ++i) {
        Trop best;
        for (std::size_t j = 0; j < others.size(); ++j) {
            if (lambda[j].cls != 0) continue; // top truncated, bottom absorbs
            Trop cand = others[j][i] + Trop(lambda[j].v);
            if (cand > best) best = cand;
        }
        y[i] = best;
    }
    return y == c;
}

} // namespace

int column_rank(const Matrix& a) {
    std::vector<Vector> cols;
    for (int j = 0; j < a.cols(); ++j) {
        Vector c = a.column(j);
        if (c.is_null()) continue;
        Vector norm = projective_form(c).normalized;
        bool dup = false;
        for (const Vector& seen : cols)
            if (seen == norm) {
                dup = true;
                break;
            }
        if (!dup) cols.push_back(std::move(norm));
    }

    std::vector<bool> alive(cols.size(), true);
    for (std::size_t i = 0; i < cols.size(); ++i) {
        std::vector<Vector> others;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != i && alive[j]) others.push_back(cols[j]);
        if (column_redundant(others, cols[i])) alive[i] = false;
    }
    return static_cast<int>(std::count(alive.begin(), alive.end(), true));
}

int row_rank(const Matrix& a) { return column_rank(a.transpose()); }

RankReport rank_report(const Matrix& a, int cap) {
    RankReport r;
    r.brute_cap = cap;
    r.column_rank = column_rank(a);
    r.row_rank = row_rank(a);
    r.tropical_rank = tropical_rank_bruteforce(a, cap);
    r.symmetrized_rank = symmetrized_rank_bruteforce(a, cap);
    if (r.tropical_rank && r.symmetrized_rank && *r.tropical_rank > *r.symmetrized_rank)
        throw std::logic_error("rank chain violated: tropical > symmetrized");
    if (r.symmetrized_rank &&
        *r.symmetrized_rank > std::min(r.column_rank, r.row_rank))
        throw std::logic_error("rank chain violated: symmetrized > min(col,row)");
    return r;
}

} // namespace maxplus
