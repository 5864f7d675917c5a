#include "maxplus/semigroup.hpp"

#include <algorithm>
#include <stdexcept>

#include "maxplus/errors.hpp"
#include "maxplus/ranks.hpp"
#include "maxplus/ultimate.hpp"

namespace maxplus {

bool is_visualization(const Matrix& a, const Vector& u) {
    if (!a.is_square() || a.rows() != u.size())
        throw precondition_error("is_visualization: dimension mismatch");
    if (!u.is_finite())
        throw precondition_error("is_visualization: vector must be finite");
    Trop rho = max_cycle_mean(a);
    if (rho.is_bottom())
        throw precondition_error("is_visualization: acyclic matrix");
    Vector lhs = mul(a, u);
    for (int i = 0; i < u.size(); ++i)
        if (lhs[i] > rho + u[i]) return false;
    return true;
}

bool is_strict_visualization(const Matrix& a, const Vector& u) {
    if (!a.is_square() || a.rows() != u.size())
        throw precondition_error("is_strict_visualization: dimension mismatch");
    if (!u.is_finite())
        throw precondition_error("is_strict_visualization: vector must be finite");
    SpectralData s = spectral(a);
    if (s.rho.is_bottom())
        throw precondition_error("is_strict_visualization: acyclic matrix");
    Matrix conj = conjugate(a, u);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (conj(i, j).is_bottom()) continue;
            if (s.is_critical_arc(i, j)) {
                if (!(conj(i, j) == s.rho)) return false;
            } else if (!(conj(i, j) < s.rho)) {
                return false;
            }
        }
    return true;
}

namespace {

// Single-source feasibility of the difference constraints u_j - u_i <= b_ij
// by Bellman-Ford value iteration from an implicit zero source; returns the
// potentials, or nothing when a negative cycle makes the system infeasible.
struct Constraint {
    int from, to;
    Rat bound;
};

std::optional<std::vector<Rat>> solve_difference_constraints(
    int n, const std::vector<Constraint>& cs) {
    std::vector<Rat> dist(static_cast<std::size_t>(n), Rat(0));
    for (int round = 0; round < n; ++round) {
        bool changed = false;
        for (const Constraint& c : cs) {
            Rat cand = dist[static_cast<std::size_t>(c.from)] + c.bound;
            if (cand < dist[static_cast<std::size_t>(c.to)]) {
                dist[static_cast<std::size_t>(c.to)] = std::move(cand);
                changed = true;
            }
        }
        if (!changed) return dist;
    }
    return std::nullopt; // still relaxing after n rounds: negative cycle
}

} // namespace

Vector strict_visualization(const Matrix& a) {
    if (!a.is_square())
        throw precondition_error("strict_visualization: matrix must be square");
    SpectralData s = spectral(a);
    if (s.rho.is_bottom())
        throw precondition_error("strict_visualization: acyclic matrix");
    const int n = a.rows();
    const Rat& rho = s.rho.rat();

    // Non-critical circuits have strictly positive mean deficit, so the
    // margin is feasible once small enough; halve until it is.
    Rat delta(1);
    for (int attempt = 0; attempt < 128; ++attempt) {
        std::vector<Constraint> cs;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (a(i, j).is_bottom()) continue;
                Rat bound = rho - a(i, j).rat();
                if (!s.is_critical_arc(i, j)) bound -= delta;
                cs.push_back({i, j, std::move(bound)});
            }
        if (auto dist = solve_difference_constraints(n, cs)) {
            Vector u(n);
            for (int i = 0; i < n; ++i) u[i] = Trop((*dist)[static_cast<std::size_t>(i)]);
            if (!is_strict_visualization(a, u))
                throw std::logic_error("strict_visualization: self-check failed");
            return u;
        }
        delta /= Rat(2);
    }
    throw std::logic_error("strict_visualization: no feasible margin found");
}

bool fundamental_cell_contains(const Matrix& a, const Vector& x) {
    if (!a.is_square() || a.rows() != x.size())
        throw precondition_error("fundamental_cell_contains: dimension mismatch");
    if (!x.is_finite())
        throw precondition_error("fundamental_cell_contains: point must be finite");
    PermanentCertificate cert = permanent(a);
    if (cert.singular) return false; // the cell of a singular matrix is empty
    const auto& tau = *cert.tau;
    for (int i = 0; i < a.rows(); ++i) {
        int ti = tau[static_cast<std::size_t>(i)];
        Trop pivot = a(i, ti) + x[ti];
        for (int j = 0; j < a.cols(); ++j) {
            if (j == ti || a(i, j).is_bottom()) continue;
            if (!((a(i, j) + x[j]) < pivot)) return false;
        }
    }
    return true;
}

bool fundamental_cell_contains(const FundamentalCellQuery& q) {
    return fundamental_cell_contains(q.matrix, q.point);
}

GeneratorSet GeneratorSet::make(std::vector<Matrix> generators) {
    if (generators.empty())
        throw precondition_error("generator set must be non-empty");
    const int n = generators.front().rows();
    for (const Matrix& g : generators)
        if (!g.is_square() || g.rows() != n)
            throw precondition_error("generators must be square and equally sized");

    GeneratorSet set;
    set.generators_ = std::move(generators);
    set.all_finite_ = true;
    for (const Matrix& g : set.generators_) {
        Trop rho = max_cycle_mean(g);
        if (rho.is_bottom()) set.all_finite_ = false;
        set.rho_.push_back(rho);
    }
    if (set.all_finite_) {
        for (std::size_t k = 0; k < set.generators_.size(); ++k)
            set.normalized_.push_back(
                scalar_mul(Trop(-set.rho_[k].rat()), set.generators_[k]));
        Matrix m = set.normalized_.front();
        for (std::size_t k = 1; k < set.normalized_.size(); ++k)
            m = sup(m, set.normalized_[k]);
        set.envelope_ = std::move(m);
    }
    return set;
}

const std::vector<Matrix>& GeneratorSet::normalized() const {
    if (!all_finite_)
        throw precondition_error("normal forms need finite cycle means");
    return normalized_;
}

const Matrix& GeneratorSet::envelope() const {
    if (!envelope_)
        throw precondition_error("envelope needs finite cycle means");
    return *envelope_;
}

bool witness_check(const GeneratorSet& g, const Vector& u) {
    if (!u.is_finite() || u.size() != g.dim())
        throw precondition_error("witness_check: finite vector of matching size required");
    for (int k = 0; k < g.size(); ++k) {
        const Matrix& a = g.generators()[static_cast<std::size_t>(k)];
        if (g.rho()[static_cast<std::size_t>(k)].is_bottom()) return false;
        if (!(mul(a, u) == scalar_mul(g.rho()[static_cast<std::size_t>(k)], u)))
            return false;
        if (!fundamental_cell_contains(a, u)) return false;
    }
    return true;
}

SemigroupDecision decide_max_ultimate_rank(const GeneratorSet& g) {
    const int n = g.dim();
    SemigroupDecision d;

    d.c1.ok = true;
    for (int k = 0; k < g.size() && d.c1.ok; ++k) {
        UltimateRankResult ur = ultimate_rank(g.generators()[static_cast<std::size_t>(k)]);
        if (ur.value != n) {
            d.c1.ok = false;
            d.c1.offender = k + 1;
            d.c1.offender_urk = ur.value;
        }
    }
    if (!g.all_rho_finite()) {
        // an acyclic generator has ultimate rank 0 < n: C1 already failed,
        // and no envelope exists to evaluate C2/C3 against
        d.verdict = false;
        return d;
    }

    const Matrix& m = g.envelope();
    SpectralData sm = spectral(m);
    d.c2.evaluated = true;
    d.c2.rho_envelope = sm.rho;
    d.c2.ok = (sm.rho == Trop(0));

    d.c3.evaluated = true;
    d.c3.ok = true;
    // scan critical arcs in lexicographic order so the reported offender is
    // deterministic
    std::vector<std::pair<int, int>> arcs;
    for (int v = 0; v < sm.critical_graph.node_count(); ++v)
        for (const Arc& arc : sm.critical_graph.out(v)) arcs.emplace_back(v, arc.to);
    std::sort(arcs.begin(), arcs.end());
    std::vector<SpectralData> gen_spectral;
    for (int k = 0; k < g.size(); ++k)
        gen_spectral.push_back(spectral(g.generators()[static_cast<std::size_t>(k)]));
    for (const auto& [i, j] : arcs) {
        if (!d.c3.ok) break;
        for (int k = 0; k < g.size(); ++k) {
            const Matrix& norm = g.normalized()[static_cast<std::size_t>(k)];
            if (norm(i, j).is_bottom() || !(norm(i, j) == m(i, j))) continue;
            if (!gen_spectral[static_cast<std::size_t>(k)].is_critical_arc(i, j)) {
                d.c3.ok = false;
                d.c3.offender_generator = k + 1;
                d.c3.offender_arc = {i + 1, j + 1};
                break;
            }
        }
    }

    d.verdict = d.c1.ok && d.c2.ok && d.c3.ok;
    if (d.verdict) {
        Vector witness = strict_visualization(m);
        if (!witness_check(g, witness))
            throw std::logic_error("semigroup decision: witness fails its certificate");
        d.witness_eigenvector = std::move(witness);
    }
    return d;
}

SemigroupOracleReport semigroup_oracle(const GeneratorSet& g, int max_len) {
    const int n = g.dim();
    if (max_len <= 0) max_len = n + 1;

    SemigroupOracleReport report;
    report.max_len = max_len;

    double total = 0, pw = 1;
    for (int len = 1; len <= max_len; ++len) {
        pw *= g.size();
        total += pw;
    }
    if (total > 4e6) {
        report.budget_exceeded = true;
        return report;
    }

    // iterative deepening in lexicographic order: memory stays O(depth)
    // and the first offending word is the shortest, then smallest
    std::vector<int> word(static_cast<std::size_t>(max_len));
    std::vector<Matrix> prefix(static_cast<std::size_t>(max_len) + 1);

    auto dfs = [&](auto&& self, int depth, int target) -> bool {
        if (depth == target) {
            ++report.products_checked;
            int urk = ultimate_rank(prefix[static_cast<std::size_t>(depth)]).value;
            if (urk < n) {
                std::vector<int> witness(word.begin(), word.begin() + target);
                for (int& w : witness) ++w; // 1-based in reports
                report.witness_product = std::move(witness);
                report.witness_urk = urk;
                return true;
            }
            return false;
        }
        for (int k = 0; k < g.size(); ++k) {
            const Matrix& gen = g.generators()[static_cast<std::size_t>(k)];
            prefix[static_cast<std::size_t>(depth) + 1] =
                depth == 0 ? gen : mul(prefix[static_cast<std::size_t>(depth)], gen);
            word[static_cast<std::size_t>(depth)] = k;
            if (self(self, depth + 1, target)) return true;
        }
        return false;
    };

    for (int len = 1; len <= max_len && !report.not_maximal; ++len)
        if (dfs(dfs, 0, len)) report.not_maximal = true;

    SemigroupDecision decision = decide_max_ultimate_rank(g);
    report.agrees = (decision.verdict == !report.not_maximal);
    return report;
}

} // namespace maxplus
