#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "maxplus/matrix.hpp"
#include "maxplus/spectral.hpp"

namespace maxplus {

/// u is a visualization of A iff A (*) u <= rho(A) (+) u entrywise.
/// Requires finite u and a non-acyclic matrix.
bool is_visualization(const Matrix& a, const Vector& u);

/// Strict: conjugating by u puts exactly rho on critical arcs and strictly
/// less than rho on every other arc.
bool is_strict_visualization(const Matrix& a, const Vector& u);

/// Produces a finite strict visualization by solving the difference
/// constraints u_j - u_i <= rho - A_ij (minus a margin off the critical
/// graph) with exact single-source shortest paths; the margin starts at 1
/// and halves until the system is feasible.
Vector strict_visualization(const Matrix& a);

struct FundamentalCellQuery {
    Matrix matrix;
    Vector point;
};

/// Strict-inequality membership in the fundamental cell of a non-singular
/// matrix; the cell of a singular matrix is empty, so the query is false.
bool fundamental_cell_contains(const Matrix& a, const Vector& x);
bool fundamental_cell_contains(const FundamentalCellQuery& q);

/// A finite list of square generators of equal size. Normal forms and the
/// envelope M = sup of the normal forms exist once every generator has a
/// finite cycle mean.
class GeneratorSet {
public:
    static GeneratorSet make(std::vector<Matrix> generators);

    int size() const { return static_cast<int>(generators_.size()); }
    int dim() const { return generators_.front().rows(); }
    const std::vector<Matrix>& generators() const { return generators_; }
    const std::vector<Trop>& rho() const { return rho_; }
    bool all_rho_finite() const { return all_finite_; }
    const std::vector<Matrix>& normalized() const; // requires all_rho_finite
    const Matrix& envelope() const;                // requires all_rho_finite

private:
    GeneratorSet() = default;
    std::vector<Matrix> generators_;
    std::vector<Trop> rho_;
    bool all_finite_ = false;
    std::vector<Matrix> normalized_;
    std::optional<Matrix> envelope_;
};

/// Verdict of the maximal-ultimate-rank decision with per-condition
/// diagnostics. C2 and C3 are only evaluated when every generator has a
/// finite cycle mean (otherwise C1 already failed).
struct SemigroupDecision {
    bool verdict = false;

    struct C1 {
        bool ok = false;
        int offender = -1; // 1-based generator index when !ok
        int offender_urk = -1;
    } c1;
    struct C2 {
        bool evaluated = false;
        bool ok = false;
        Trop rho_envelope;
    } c2;
    struct C3 {
        bool evaluated = false;
        bool ok = false;
        int offender_generator = -1;          // 1-based
        std::pair<int, int> offender_arc{-1, -1}; // 1-based nodes
    } c3;

    std::optional<Vector> witness_eigenvector; // present iff verdict
};

SemigroupDecision decide_max_ultimate_rank(const GeneratorSet& g);

/// True iff u is a common eigenvector of every generator (for its own rho)
/// lying in every generator's fundamental cell.
bool witness_check(const GeneratorSet& g, const Vector& u);

/// Exhaustive product enumeration up to max_len (default dim+1, which the
/// short-counterexample bounds make sufficient); compares the enumeration
/// verdict with the decision and reports the first offending word.
struct SemigroupOracleReport {
    bool not_maximal = false;
    std::optional<std::vector<int>> witness_product; // 1-based generator ids
    std::optional<int> witness_urk;
    bool agrees = false;
    long products_checked = 0;
    int max_len = 0;
    bool budget_exceeded = false;
};

SemigroupOracleReport semigroup_oracle(const GeneratorSet& g, int max_len = -1);

} // namespace maxplus
