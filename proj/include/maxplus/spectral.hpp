#pragma once

#include <optional>
#include <vector>

#include "maxplus/digraph.hpp"
#include "maxplus/matrix.hpp"

namespace maxplus {

/// Maximum cycle mean rho(A); bottom iff the graph of A is acyclic.
/// Karp's dynamic program, run per non-trivial scc.
Trop max_cycle_mean(const Matrix& a);

/// B* with zero diagonal and maximal path weights off it. Requires a square
/// matrix with rho(B) <= 0; throws precondition_error otherwise.
Matrix kleene_star(const Matrix& b);

/// Spectral summary: rho, the critical graph (arcs of circuits whose mean
/// is exactly rho), its scc decomposition and their cyclicities.
struct SpectralData {
    Trop rho;
    Digraph critical_graph;            // arcs only; node ids are global
    std::vector<int> critical_nodes;   // ascending
    SccDecomposition critical_scc;     // decomposition of critical_graph
    std::vector<int> critical_components; // ids of non-trivial components
    std::vector<int> cyclicities;         // parallel to critical_components

    bool is_critical_node(int v) const;
    bool is_critical_arc(int i, int j) const { return critical_graph.has_arc(i, j); }
};

SpectralData spectral(const Matrix& a);

/// Generating eigenvectors for rho(A), one per scc of the critical graph:
/// the columns of ((-rho) (*) A)* at one critical node per component.
struct EigenBasis {
    Trop eigenvalue;
    std::vector<Vector> generators;
};

EigenBasis eigen_basis(const Matrix& a);

/// The eigenvalue lambda with A (*) v = lambda (+) v, if one exists.
std::optional<Trop> is_eigenvector(const Matrix& a, const Vector& v);

/// Projective orbit of the powers of (-rho) (*) A. Repetition of the
/// normalized form at steps k and k+c certifies A^(k+c) = c rho (+) A^k.
/// When some scc of the graph lacks a critical node the orbit may never
/// close; exhausting max_steps is a reported outcome, not an error.
struct OrbitReport {
    bool closed = false;
    int preperiod = 0;    // meaningful when closed; first repeated power index
    int period = 0;
    int steps = 0;        // powers computed (indices 1..steps)
    std::vector<Matrix> normalized; // normalized A^w for w = 1..steps
    std::vector<Trop> shifts;       // accumulated normalization shifts
};

int default_orbit_steps(int n);

OrbitReport power_orbit(const Matrix& a, long max_steps = -1);

} // namespace maxplus
