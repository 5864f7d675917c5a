#pragma once

// Brute-force reference computations used as independent oracles, plus the
// random-input generators shared by the suites. Everything here is plain
// enumeration over the core arithmetic types; none of it calls the
// algorithms it is used to check.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "maxplus/matrix.hpp"

namespace oracle {

using maxplus::Matrix;
using maxplus::Rat;
using maxplus::Trop;
using maxplus::Vector;

struct Circuit {
    std::vector<int> nodes; // distinct nodes in visit order
    Rat weight;
};

// Every simple circuit, found by DFS from each start node using only nodes
// with id >= start so each circuit is produced exactly once.
inline std::vector<Circuit> simple_circuits(const Matrix& a) {
    const int n = a.rows();
    std::vector<Circuit> found;
    std::vector<int> path;
    std::vector<bool> on_path(static_cast<std::size_t>(n), false);

    auto dfs = [&](auto&& self, int start, int v, Rat weight) -> void {
        for (int w = start; w < n; ++w) {
            if (a(v, w).is_bottom()) continue;
            Rat next = weight + a(v, w).rat();
            if (w == start) {
                found.push_back({path, next});
            } else if (!on_path[static_cast<std::size_t>(w)]) {
                on_path[static_cast<std::size_t>(w)] = true;
                path.push_back(w);
                self(self, start, w, next);
                path.pop_back();
                on_path[static_cast<std::size_t>(w)] = false;
            }
        }
    };

    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        std::fill(on_path.begin(), on_path.end(), false);
        on_path[static_cast<std::size_t>(s)] = true;
        dfs(dfs, s, s, Rat(0));
    }
    return found;
}

inline std::optional<Rat> cycle_mean(const Matrix& a) {
    std::optional<Rat> best;
    for (const Circuit& c : simple_circuits(a)) {
        Rat mean = c.weight / Rat(static_cast<long>(c.nodes.size()));
        if (!best || mean > *best) best = mean;
    }
    return best;
}

// Arcs lying on some simple circuit of mean weight exactly rho.
inline std::set<std::pair<int, int>> critical_arcs(const Matrix& a) {
    std::set<std::pair<int, int>> arcs;
    auto rho = cycle_mean(a);
    if (!rho) return arcs;
    for (const Circuit& c : simple_circuits(a)) {
        if (!(c.weight == *rho * Rat(static_cast<long>(c.nodes.size())))) continue;
        for (std::size_t k = 0; k < c.nodes.size(); ++k)
            arcs.emplace(c.nodes[k], c.nodes[(k + 1) % c.nodes.size()]);
    }
    return arcs;
}

inline long circuit_length_gcd(const Matrix& a) {
    long g = 0;
    for (const Circuit& c : simple_circuits(a))
        g = std::gcd(g, static_cast<long>(c.nodes.size()));
    return g;
}

struct PermanentEnumeration {
    Trop value;       // max over all permutations
    long maximizers;  // how many permutations attain it
    std::vector<int> best;
    bool singular;    // per the 1x1 null rule and the two-maximizer rule
};

inline PermanentEnumeration permanent(const Matrix& a) {
    const int n = a.rows();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    PermanentEnumeration out{Trop::bottom(), 0, {}, true};
    do {
        Trop w = Trop(0);
        for (int i = 0; i < n; ++i) w += a(i, perm[static_cast<std::size_t>(i)]);
        if (out.maximizers == 0 || w > out.value) {
            out.value = w;
            out.maximizers = 1;
            out.best = perm;
        } else if (w == out.value) {
            ++out.maximizers;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.singular = out.maximizers >= 2 || out.value.is_bottom();
    return out;
}

// Pairwise reachability closure; components as sorted node sets.
inline std::vector<std::vector<int>> scc_by_reachability(const Matrix& a) {
    const int n = a.rows();
    std::vector<std::vector<bool>> reach(static_cast<std::size_t>(n),
                                         std::vector<bool>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                !a(i, j).is_bottom();
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
                    reach[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
                    reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;

    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> comps;
    for (int i = 0; i < n; ++i) {
        if (comp[static_cast<std::size_t>(i)] != -1) continue;
        std::vector<int> c;
        for (int j = i; j < n; ++j)
            if (comp[static_cast<std::size_t>(j)] == -1 &&
                (i == j ||
                 (reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
                  reach[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]))) {
                comp[static_cast<std::size_t>(j)] = static_cast<int>(comps.size());
                c.push_back(j);
            }
        comps.push_back(std::move(c));
    }
    return comps;
}

// ---- random inputs ---------------------------------------------------

class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}

    int uniform(int lo, int hi) { // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(g_);
    }
    bool chance(double p) {
        return std::uniform_real_distribution<double>(0, 1)(g_) < p;
    }

    // small rational from [lo, hi] with denominator 1, 2 or 3
    Rat rat(int lo, int hi) {
        int den = uniform(1, 3);
        return Rat(uniform(lo * den, hi * den), den);
    }

    Trop entry(double bottom_prob, int lo, int hi) {
        if (chance(bottom_prob)) return Trop::bottom();
        return Trop(rat(lo, hi));
    }

    Matrix matrix(int rows, int cols, double bottom_prob, int lo, int hi) {
        Matrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = entry(bottom_prob, lo, hi);
        return m;
    }

    Matrix int_matrix(int rows, int cols, double bottom_prob, int lo, int hi) {
        Matrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                m(i, j) = chance(bottom_prob) ? Trop::bottom() : Trop(uniform(lo, hi));
        return m;
    }

    Vector finite_vector(int n, int lo, int hi) {
        Vector v(n);
        for (int i = 0; i < n; ++i) v[i] = Trop(rat(lo, hi));
        return v;
    }

    std::mt19937_64& raw() { return g_; }

private:
    std::mt19937_64 g_;
};

// Random matrix whose critical graph is exactly the graph of a random
// permutation: zero weight along the permutation, strictly negative
// everywhere else, hence ultimate rank n.
inline Matrix planted_max_urank(Rng& rng, int n) {
    Matrix m(n, n);
    std::vector<int> tau(static_cast<std::size_t>(n));
    std::iota(tau.begin(), tau.end(), 0);
    std::shuffle(tau.begin(), tau.end(), rng.raw());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j == tau[static_cast<std::size_t>(i)])
                m(i, j) = Trop(0);
            else if (!rng.chance(0.3))
                m(i, j) = Trop(rng.rat(-5, -1));
        }
    return m;
}

// Random matrix in which every non-trivial scc holds a planted zero-mean
// loop while all other entries stay below zero, so the torsion hypothesis
// holds and the power orbit closes.
inline Matrix planted_torsion(Rng& rng, int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rng.chance(0.7)) m(i, j) = Trop(rng.rat(-6, -1));
    for (int i = 0; i < n; ++i)
        if (rng.chance(0.6)) m(i, i) = Trop(0);
    // ensure at least one critical loop per non-trivial component
    auto comps = scc_by_reachability(m);
    for (const auto& comp : comps) {
        bool nontrivial = comp.size() > 1 || !m(comp[0], comp[0]).is_bottom();
        if (!nontrivial) continue;
        bool has_zero_loop = false;
        for (int v : comp)
            if (m(v, v) == Trop(0)) has_zero_loop = true;
        if (!has_zero_loop) m(comp[0], comp[0]) = Trop(0);
    }
    return m;
}

} // namespace oracle
