#pragma once

#include <optional>
#include <vector>

#include "maxplus/matrix.hpp"

namespace maxplus {

/// Optimal-assignment certificate for a square matrix.
/// permanent = max over permutations s of sum_i A_{i,s(i)}; the matrix is
/// singular iff it is the 1x1 null matrix or at least two permutations
/// attain the maximum. tau is the unique maximizer when non-singular.
/// The dual potentials satisfy A_ij <= u_i + v_j with equality on tau and
/// certify optimality: permanent = sum u + sum v.
struct PermanentCertificate {
    Trop permanent;
    bool singular = true;
    std::optional<std::vector<int>> tau;
    std::optional<Vector> row_potential;
    std::optional<Vector> col_potential;
};

PermanentCertificate permanent(const Matrix& a);

bool is_nonsingular(const Matrix& a);

/// Exact tropical rank by descending enumeration of square submatrices.
/// Returns nullopt when min(rows, cols) exceeds the cap (the computation is
/// NP-hard in general, so sizes are capped; default cap 7).
std::optional<int> tropical_rank_bruteforce(const Matrix& a, int cap = 7);

/// Maximal r with an r x r submatrix whose even-permutation maximum differs
/// from its odd-permutation maximum; capped like the tropical rank.
std::optional<int> symmetrized_rank_bruteforce(const Matrix& a, int cap = 7);

/// Weak dimension of the tropical convex hull of the columns: null columns
/// are dropped, projective duplicates merged, and a column is discarded iff
/// the residuation recombination of the remaining ones reproduces it.
int column_rank(const Matrix& a);
int row_rank(const Matrix& a);

struct RankReport {
    int column_rank = 0;
    int row_rank = 0;
    std::optional<int> tropical_rank;     // nullopt = not computed (size cap)
    std::optional<int> symmetrized_rank;
    int brute_cap = 7;
};

RankReport rank_report(const Matrix& a, int cap = 7);

} // namespace maxplus
