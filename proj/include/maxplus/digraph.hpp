#pragma once

#include <vector>

#include "maxplus/matrix.hpp"
#include "maxplus/rational.hpp"

namespace maxplus {

/// Weighted digraph on nodes 0..n-1. Arc (i,j) exists iff the matrix entry
/// A_ij is finite; its weight is A_ij.
struct Arc {
    int to;
    Rat weight;
};

class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n) : out_(static_cast<std::size_t>(n)) {}

    int node_count() const { return static_cast<int>(out_.size()); }
    void add_arc(int from, int to, Rat w) {
        out_[static_cast<std::size_t>(from)].push_back({to, std::move(w)});
    }
    const std::vector<Arc>& out(int v) const { return out_[static_cast<std::size_t>(v)]; }

    int arc_count() const;
    bool has_arc(int from, int to) const;

private:
    std::vector<std::vector<Arc>> out_;
};

Digraph graph_of(const Matrix& a);

/// Maximal strongly connected components. A component is trivial iff it is
/// a single node carrying no loop.
struct SccDecomposition {
    std::vector<int> component_of;          // node -> component id
    std::vector<std::vector<int>> components;
    std::vector<bool> trivial;

    int count() const { return static_cast<int>(components.size()); }
    int nontrivial_count() const;
};

SccDecomposition scc(const Digraph& g);

/// gcd of the circuit lengths inside one non-trivial scc, computed from BFS
/// levels: gcd over internal arcs (u,v) of level(u)+1-level(v).
int cyclicity_scc(const Digraph& g, const SccDecomposition& d, int component);

/// lcm of the scc cyclicities; requires a completely reducible graph
/// (every arc inside some scc). Trivial components contribute nothing.
long cyclicity_graph(const Digraph& g);

} // namespace maxplus
