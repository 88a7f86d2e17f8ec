#ifndef JCF_INCREMENTAL_LU_HPP
#define JCF_INCREMENTAL_LU_HPP

#include <cstddef>
#include <vector>

#include "jcf/matrix.hpp"

namespace jcf {

/// Exact PLU factorization with its elimination history, so a later column
/// replacement can resume the factorization mid-stream instead of starting
/// over. Immutable snapshot: updates return a new value.
struct LUFactors {
    Matrix lower;                     // unit lower triangular, multipliers in final row order
    Matrix upper;                     // upper triangular
    std::vector<std::size_t> perm;    // perm[i] = source row stored at position i
    std::vector<std::size_t> pivot_seq; // row swapped into position j at step j
    Matrix source;                    // the factored matrix, original row order
    std::size_t settled_cols = 0;     // leading columns stable across the next update

    std::size_t n() const { return perm.size(); }
};

/// Exact PLU factorization. Pivot selection is the first nonzero entry in
/// the pivot column at or below the diagonal; deterministic, so two routes
/// to the same matrix yield bit-identical factors. Throws
/// Errc::singular_matrix when no pivot exists, which upstream means a
/// dependent column slipped into the basis.
LUFactors lu_decompose(const Matrix& m);

/// Exact solution of source * x = b.
Vector lu_solve(const LUFactors& f, const Vector& b, OpCounters* tally = nullptr);

/// Factors of the matrix obtained by replacing columns
/// [start_col, start_col + new_cols.size()) of f.source. The recorded
/// eliminations and row swaps of the first start_col steps are replayed onto
/// the changed region and elimination continues from start_col rightward
/// only; the result is identical to a fresh decomposition of the mutated
/// matrix, with the leading start_col columns of both factors bit-identical
/// to f's.
LUFactors lu_update_columns(const LUFactors& f, std::size_t start_col,
                            const std::vector<Vector>& new_cols);

/// Exact inverse via n triangular solves.
Matrix invert(const LUFactors& f, OpCounters* tally = nullptr);

} // namespace jcf

#endif
