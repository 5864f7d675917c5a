#pragma once

#include <optional>
#include <vector>

#include "maxplus/matrix.hpp"
#include "maxplus/ranks.hpp"
#include "maxplus/spectral.hpp"

namespace maxplus {

/// Ultimate rank: the common minimum, over the closure of the projective
/// semigroup of powers, of every rank notion; equals the sum of the
/// cyclicities of the strongly connected components of the critical graph.
/// Acyclic (and null) matrices get value 0: their powers are eventually
/// null and the empty sum agrees with the null-matrix rank convention.
struct UltimateRankResult {
    int value = 0;
    int critical_scc_count = 0;
    std::vector<int> per_scc_cyclicities;
    bool acyclic = false; // rho = -inf (covers the null matrix)
};

UltimateRankResult ultimate_rank(const Matrix& a);

/// urk(A) = n holds iff the critical graph is a disjoint union of simple
/// circuits covering all nodes, iff the permanent has a unique maximizing
/// permutation whose graph is the critical graph. All three routes are
/// evaluated; they must agree, and per(A) = n rho(A) is asserted when true.
struct MaxUltimateRankDiagnosis {
    bool is_max = false;
    bool by_formula = false;          // urk == n
    bool by_permutation_cover = false; // every node: exactly one critical in/out arc
    bool by_permanent = false;         // unique maximizer, Gc = graph of tau
};

MaxUltimateRankDiagnosis has_max_ultimate_rank(const Matrix& a);

/// Independent power-orbit route: when the projective orbit closes, the
/// column rank over the periodic part equals the ultimate rank. When some
/// scc of the graph has no critical node the orbit never closes and the
/// limit need not equal the formula; that case is reported inconclusive.
struct UltimateRankOracle {
    enum class Status { closed, inconclusive };
    Status status = Status::inconclusive;
    std::optional<int> value;     // set when closed
    int preperiod = 0;
    int period = 0;
    bool torsion_hypothesis = false; // every scc of G(A) holds a critical node
    std::optional<int> truncated_column_rank; // last observed rank when open
};

UltimateRankOracle ultimate_rank_oracle(const Matrix& a, long max_steps = -1);

} // namespace maxplus
