#include "maxplus/ultimate.hpp"

#include <numeric>
#include <stdexcept>

#include "maxplus/errors.hpp"

namespace maxplus {

UltimateRankResult ultimate_rank(const Matrix& a) {
    if (!a.is_square())
        throw precondition_error("ultimate_rank: matrix must be square");
    UltimateRankResult r;
    if (a.is_null()) { // null-matrix convention, short-circuited
        r.acyclic = true;
        return r;
    }
    SpectralData s = spectral(a);
    if (s.rho.is_bottom()) {
        r.acyclic = true;
        return r;
    }
    r.per_scc_cyclicities = s.cyclicities;
    r.critical_scc_count = static_cast<int>(s.critical_components.size());
    r.value = std::accumulate(s.cyclicities.begin(), s.cyclicities.end(), 0);
    return r;
}

MaxUltimateRankDiagnosis has_max_ultimate_rank(const Matrix& a) {
    if (!a.is_square())
        throw precondition_error("has_max_ultimate_rank: matrix must be square");
    const int n = a.rows();
    MaxUltimateRankDiagnosis d;

    UltimateRankResult ur = ultimate_rank(a);
    d.by_formula = (ur.value == n);

    SpectralData s = a.is_null() ? SpectralData{} : spectral(a);
    if (!ur.acyclic) {
        std::vector<int> out_deg(static_cast<std::size_t>(n), 0),
            in_deg(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < s.critical_graph.node_count(); ++v)
            for (const Arc& arc : s.critical_graph.out(v)) {
                ++out_deg[static_cast<std::size_t>(v)];
                ++in_deg[static_cast<std::size_t>(arc.to)];
            }
        d.by_permutation_cover = true;
        for (int v = 0; v < n; ++v)
            if (out_deg[static_cast<std::size_t>(v)] != 1 ||
                in_deg[static_cast<std::size_t>(v)] != 1)
                d.by_permutation_cover = false;

        PermanentCertificate cert = permanent(a);
        if (!cert.singular) {
            bool match = s.critical_graph.arc_count() == n;
            for (int i = 0; i < n && match; ++i)
                if (!s.is_critical_arc(i, (*cert.tau)[static_cast<std::size_t>(i)]))
                    match = false;
            d.by_permanent = match;
        }
        if (d.by_formula) {
            Trop n_rho = Trop(s.rho.rat() * Rat(n));
            if (!(cert.permanent == n_rho))
                throw std::logic_error("max ultimate rank: per(A) != n*rho(A)");
        }
    }

    if (d.by_formula != d.by_permutation_cover || d.by_formula != d.by_permanent)
        throw std::logic_error("max ultimate rank: equivalent conditions disagree");
    d.is_max = d.by_formula;
    return d;
}

UltimateRankOracle ultimate_rank_oracle(const Matrix& a, long max_steps) {
    if (!a.is_square())
        throw precondition_error("ultimate_rank_oracle: matrix must be square");
    if (a.is_null())
        throw precondition_error("ultimate_rank_oracle: null matrix rejected");

    UltimateRankOracle oracle;

    SpectralData s = spectral(a);
    Digraph g = graph_of(a);
    SccDecomposition comps = scc(g);
    // Trivial scc are pass-through nodes: walks spend no time there, so
    // only components that carry a circuit must reach the cycle mean.
    oracle.torsion_hypothesis = true;
    for (int c = 0; c < comps.count() && oracle.torsion_hypothesis; ++c) {
        if (comps.trivial[static_cast<std::size_t>(c)]) continue;
        bool holds = false;
        for (int v : comps.components[static_cast<std::size_t>(c)])
            if (s.is_critical_node(v)) holds = true;
        if (!holds) oracle.torsion_hypothesis = false;
    }

    OrbitReport orbit = power_orbit(a, max_steps);
    if (orbit.closed) {
        oracle.status = UltimateRankOracle::Status::closed;
        oracle.preperiod = orbit.preperiod;
        oracle.period = orbit.period;
        int best = -1;
        for (int w = orbit.preperiod; w < orbit.preperiod + orbit.period; ++w) {
            int r = column_rank(orbit.normalized[static_cast<std::size_t>(w) - 1]);
            if (best < 0 || r < best) best = r;
        }
        oracle.value = best;
    } else if (!orbit.normalized.empty()) {
        oracle.truncated_column_rank = column_rank(orbit.normalized.back());
    }
    return oracle;
}

} // namespace maxplus
