#include "maxplus/spectral.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "maxplus/errors.hpp"
#include "maxplus/kernels.hpp"

namespace maxplus {

namespace {

// Maximum cycle mean of one non-trivial scc: longest-walk table from a
// component source, then Karp's formula over the walk-length differences.
Rat karp_component(const Matrix& a, const std::vector<int>& comp) {
    const int n = static_cast<int>(comp.size());
    Matrix b(n, n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) b(p, q) = a(comp[p], comp[q]);

    // walks[k][v]: maximal weight of a length-k walk source -> v
    std::vector<Vector> walks(static_cast<std::size_t>(n) + 1, Vector(n));
    walks[0][0] = Trop(0);
    for (int k = 0; k < n; ++k) {
        Vector next(n);
        kernels::mul(&walks[static_cast<std::size_t>(k)][0], b.data(), &next[0], 1, n, n);
        walks[static_cast<std::size_t>(k) + 1] = std::move(next);
    }

    bool have = false;
    Rat best;
    const Vector& last = walks[static_cast<std::size_t>(n)];
    for (int v = 0; v < n; ++v) {
        if (last[v].is_bottom()) continue;
        bool have_min = false;
        Rat vmin;
        for (int k = 0; k < n; ++k) {
            const Trop& dk = walks[static_cast<std::size_t>(k)][v];
            if (dk.is_bottom()) continue;
            Rat mean = (last[v].rat() - dk.rat()) / Rat(n - k);
            if (!have_min || mean < vmin) {
                vmin = mean;
                have_min = true;
            }
        }
        // a length-n walk always has a shorter sibling obtained by removing
        // a circuit, so the inner minimum is never empty
        if (!have_min) throw std::logic_error("karp: no finite prefix walk");
        if (!have || vmin > best) {
            best = vmin;
            have = true;
        }
    }
    if (!have) throw std::logic_error("karp: no length-n walk inside an scc");
    return best;
}

struct ComponentMeans {
    Digraph graph;
    SccDecomposition sccs;
    std::vector<std::optional<Rat>> mean; // per component, set iff non-trivial
    Trop rho;
};

ComponentMeans component_means(const Matrix& a) {
    ComponentMeans out{graph_of(a), {}, {}, Trop::bottom()};
    out.sccs = scc(out.graph);
    out.mean.resize(static_cast<std::size_t>(out.sccs.count()));
    for (int c = 0; c < out.sccs.count(); ++c) {
        if (out.sccs.trivial[static_cast<std::size_t>(c)]) continue;
        Rat m = karp_component(a, out.sccs.components[static_cast<std::size_t>(c)]);
        out.mean[static_cast<std::size_t>(c)] = m;
        if (out.rho.is_bottom() || Trop(m) > out.rho) out.rho = Trop(m);
    }
    return out;
}

} // namespace

Trop max_cycle_mean(const Matrix& a) {
    if (!a.is_square())
        throw precondition_error("max_cycle_mean: matrix must be square");
    return component_means(a).rho;
}

Matrix kleene_star(const Matrix& b) {
    if (!b.is_square())
        throw precondition_error("kleene_star: matrix must be square");
    Matrix d = b;
    kernels::star(d.data(), d.rows());
    return d;
}

bool SpectralData::is_critical_node(int v) const {
    return std::binary_search(critical_nodes.begin(), critical_nodes.end(), v);
}

SpectralData spectral(const Matrix& a) {
    if (!a.is_square())
        throw precondition_error("spectral: matrix must be square");
    const int n = a.rows();
    ComponentMeans cm = component_means(a);

    SpectralData out;
    out.rho = cm.rho;
    out.critical_graph = Digraph(n);
    if (out.rho.is_bottom()) { // acyclic: empty critical graph
        out.critical_scc = scc(out.critical_graph);
        return out;
    }

    const Rat& rho = out.rho.rat();
    std::vector<bool> critical(static_cast<std::size_t>(n), false);
    for (int c = 0; c < cm.sccs.count(); ++c) {
        if (!cm.mean[static_cast<std::size_t>(c)] ||
            !(*cm.mean[static_cast<std::size_t>(c)] == rho))
            continue;
        const auto& comp = cm.sccs.components[static_cast<std::size_t>(c)];
        const int m = static_cast<int>(comp.size());
        Matrix b(m, m);
        for (int p = 0; p < m; ++p)
            for (int q = 0; q < m; ++q) b(p, q) = a(comp[p], comp[q]) - rho;
        Matrix star = kleene_star(b);
        // arc (i,j) is critical iff it lies on a zero-weight circuit of the
        // normalized component, i.e. b_ij + star_ji = 0
        for (int p = 0; p < m; ++p)
            for (int q = 0; q < m; ++q) {
                if (b(p, q).is_bottom() || star(q, p).is_bottom()) continue;
                if ((b(p, q) + star(q, p)) == Trop(0)) {
                    out.critical_graph.add_arc(comp[p], comp[q],
                                               a(comp[p], comp[q]).rat());
                    critical[static_cast<std::size_t>(comp[p])] = true;
                    critical[static_cast<std::size_t>(comp[q])] = true;
                }
            }
    }
    for (int v = 0; v < n; ++v)
        if (critical[static_cast<std::size_t>(v)]) out.critical_nodes.push_back(v);

    out.critical_scc = scc(out.critical_graph);
    for (int c = 0; c < out.critical_scc.count(); ++c)
        if (!out.critical_scc.trivial[static_cast<std::size_t>(c)]) {
            out.critical_components.push_back(c);
            out.cyclicities.push_back(cyclicity_scc(out.critical_graph, out.critical_scc, c));
        }
    return out;
}

EigenBasis eigen_basis(const Matrix& a) {
    if (!a.is_square())
        throw precondition_error("eigen_basis: matrix must be square");
    SpectralData s = spectral(a);
    if (s.rho.is_bottom())
        throw precondition_error("eigen_basis: acyclic matrix has no eigenvector");

    Matrix star = kleene_star(scalar_mul(Trop(-s.rho.rat()), a));
    EigenBasis basis;
    basis.eigenvalue = s.rho;
    for (int c : s.critical_components) {
        int rep = s.critical_scc.components[static_cast<std::size_t>(c)][0];
        Vector v = star.column(rep);
        if (!(mul(a, v) == scalar_mul(s.rho, v)))
            throw std::logic_error("eigen_basis: generator fails the eigen equation");
        basis.generators.push_back(std::move(v));
    }
    return basis;
}

std::optional<Trop> is_eigenvector(const Matrix& a, const Vector& v) {
    if (!a.is_square() || a.cols() != v.size())
        throw precondition_error("is_eigenvector: dimension mismatch");
    if (v.is_null())
        throw precondition_error("is_eigenvector: null vector rejected");
    Vector w = mul(a, v);

    Trop lambda = Trop::bottom();
    bool found = false;
    for (int i = 0; i < v.size() && !found; ++i)
        if (v[i].is_finite() && w[i].is_finite()) {
            lambda = Trop(w[i].rat() - v[i].rat());
            found = true;
        }
    // lambda stays bottom when A(*)v is null; otherwise it is pinned by any
    // index where both sides are finite
    if (w == scalar_mul(lambda, v)) return lambda;
    return std::nullopt;
}

int default_orbit_steps(int n) {
    long long nn = static_cast<long long>(n);
    long long steps = nn * nn * nn * nn + nn * nn;
    return static_cast<int>(std::min<long long>(steps, 1 << 30));
}

OrbitReport power_orbit(const Matrix& a, long max_steps) {
    if (!a.is_square())
        throw precondition_error("power_orbit: matrix must be square");
    if (a.is_null())
        throw precondition_error("power_orbit: null matrix rejected");
    const int n = a.rows();
    if (max_steps < 0) max_steps = default_orbit_steps(n);
    if (static_cast<long long>(max_steps) * n * n > (1LL << 22))
        throw precondition_error(
            "power_orbit: orbit storage budget exceeded, lower max_steps");

    Trop rho = max_cycle_mean(a);
    // acyclic matrices are iterated as-is; they are nilpotent, so the orbit
    // reaches the null matrix and closes there
    Matrix base = rho.is_bottom() ? a : scalar_mul(Trop(-rho.rat()), a);

    OrbitReport report;
    std::unordered_multimap<std::size_t, int> seen;

    ProjectiveMatrix cur = projective_form(base);
    Trop sigma = cur.shift;
    for (long w = 1; w <= max_steps; ++w) {
        std::size_t h = cur.normalized.hash();
        auto range = seen.equal_range(h);
        for (auto it = range.first; it != range.second; ++it) {
            int k = it->second;
            const Matrix& earlier = report.normalized[static_cast<std::size_t>(k) - 1];
            if (earlier == cur.normalized) {
                if (!(report.shifts[static_cast<std::size_t>(k) - 1] == sigma))
                    throw std::logic_error(
                        "power_orbit: projective repetition with shifted weights");
                report.closed = true;
                report.preperiod = k;
                report.period = static_cast<int>(w) - k;
                report.steps = static_cast<int>(w) - 1;
                return report;
            }
        }
        seen.emplace(h, static_cast<int>(w));
        report.normalized.push_back(cur.normalized);
        report.shifts.push_back(sigma);
        report.steps = static_cast<int>(w);

        ProjectiveMatrix next = projective_form(mul(cur.normalized, base));
        sigma = sigma + next.shift;
        cur = std::move(next);
    }
    return report;
}

} // namespace maxplus
