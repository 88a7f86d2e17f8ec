#include "jcf/incremental_lu.hpp"

#include <numeric>
#include <utility>

namespace jcf {

namespace {

// Eliminate columns [from, n) of the working matrix in place. `work` holds
// the still-unreduced data in current row order; rows of `lower` carry the
// multipliers recorded so far and are swapped along with the work rows so
// that multipliers stay attached to their rows.
void eliminate_from(Matrix& work, Matrix& lower, std::vector<std::size_t>& perm,
                    std::vector<std::size_t>& pivot_seq, std::size_t from) {
    const std::size_t n = work.rows();
    for (std::size_t j = from; j < n; ++j) {
        std::size_t pivot = j;
        while (pivot < n && work(pivot, j).is_zero()) ++pivot;
        if (pivot == n)
            raise(Errc::singular_matrix, "no pivot in column " + std::to_string(j));

        pivot_seq[j] = pivot;
        if (pivot != j) {
            work.swap_rows(j, pivot);
            std::swap(perm[j], perm[pivot]);
            for (std::size_t c = 0; c < j; ++c) std::swap(lower(j, c), lower(pivot, c));
        }

        const Rational inv = work(j, j).inv();
        for (std::size_t i = j + 1; i < n; ++i) {
            if (work(i, j).is_zero()) continue;
            const Rational m = work(i, j) * inv;
            lower(i, j) = m;
            work(i, j) = Rational(0);
            for (std::size_t c = j + 1; c < n; ++c) work(i, c) -= m * work(j, c);
        }
    }
}

} // namespace

LUFactors lu_decompose(const Matrix& m) {
    if (!m.is_square()) raise(Errc::dimension_mismatch, "lu_decompose");
    const std::size_t n = m.rows();

    LUFactors f;
    f.source = m;
    f.lower = Matrix::identity(n);
    f.perm.resize(n);
    std::iota(f.perm.begin(), f.perm.end(), 0);
    f.pivot_seq.assign(n, 0);

    Matrix work = m;
    eliminate_from(work, f.lower, f.perm, f.pivot_seq, 0);
    f.upper = std::move(work);
    f.settled_cols = n;
    return f;
}

Vector lu_solve(const LUFactors& f, const Vector& b, OpCounters* tally) {
    const std::size_t n = f.n();
    if (b.dim() != n) raise(Errc::dimension_mismatch, "lu_solve");
    if (tally) ++tally->solves;

    Vector y(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational acc = b[f.perm[i]];
        for (std::size_t j = 0; j < i; ++j)
            if (!f.lower(i, j).is_zero()) acc -= f.lower(i, j) * y[j];
        y[i] = acc;
    }
    Vector x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = y[i];
        for (std::size_t j = i + 1; j < n; ++j)
            if (!f.upper(i, j).is_zero()) acc -= f.upper(i, j) * x[j];
        x[i] = acc / f.upper(i, i);
    }
    return x;
}

LUFactors lu_update_columns(const LUFactors& f, std::size_t start_col,
                            const std::vector<Vector>& new_cols) {
    const std::size_t n = f.n();
    if (start_col + new_cols.size() > n)
        raise(Errc::dimension_mismatch, "lu_update_columns range");

    LUFactors out;
    out.source = f.source;
    for (std::size_t k = 0; k < new_cols.size(); ++k)
        out.source.set_column(start_col + k, new_cols[k]);

    // Permutation state after only the first start_col elimination steps.
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t j = 0; j < start_col; ++j) std::swap(perm[j], perm[f.pivot_seq[j]]);

    // Multipliers of the settled columns as they stood mid-factorization:
    // undo the row swaps of the discarded later steps, newest first.
    Matrix lower = Matrix::identity(n);
    for (std::size_t j = 0; j < start_col; ++j)
        for (std::size_t i = j + 1; i < n; ++i) lower(i, j) = f.lower(i, j);
    for (std::size_t j = n; j-- > start_col;) {
        if (f.pivot_seq[j] == j) continue;
        for (std::size_t c = 0; c < start_col; ++c) std::swap(lower(j, c), lower(f.pivot_seq[j], c));
    }

    // Settled upper columns are final; every column from start_col on is the
    // source column replayed through the recorded permutation and
    // multipliers.
    Matrix work(n, n);
    for (std::size_t j = 0; j < start_col; ++j)
        for (std::size_t i = 0; i < n; ++i) work(i, j) = f.upper(i, j);
    for (std::size_t j = start_col; j < n; ++j) {
        Vector col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = out.source(perm[i], j);
        for (std::size_t p = 0; p < start_col; ++p) {
            if (col[p].is_zero()) continue;
            for (std::size_t i = p + 1; i < n; ++i)
                if (!lower(i, p).is_zero()) col[i] -= lower(i, p) * col[p];
        }
        for (std::size_t i = 0; i < n; ++i) work(i, j) = col[i];
    }

    std::vector<std::size_t> pivot_seq(f.pivot_seq.begin(), f.pivot_seq.begin() + start_col);
    pivot_seq.resize(n, 0);

    eliminate_from(work, lower, perm, pivot_seq, start_col);

    out.lower = std::move(lower);
    out.upper = std::move(work);
    out.perm = std::move(perm);
    out.pivot_seq = std::move(pivot_seq);
    out.settled_cols = start_col + new_cols.size();
    return out;
}

Matrix invert(const LUFactors& f, OpCounters* tally) {
    const std::size_t n = f.n();
    Matrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j)
        inv.set_column(j, lu_solve(f, Vector::unit(n, j), tally));
    return inv;
}

} // namespace jcf
