#include "jcf/matrix.hpp"

#include <cassert>
#include <sstream>
#include <utility>

namespace jcf {

bool Vector::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

Vector Vector::unit(std::size_t dim, std::size_t index) {
    Vector v(dim);
    v[index] = Rational(1);
    return v;
}

std::string Vector::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < dim(); ++i) {
        if (i) os << ", ";
        os << entries_[i];
    }
    os << ")";
    return os.str();
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) {
    if (cols.empty()) return Matrix();
    Matrix m(cols[0].dim(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].dim() != m.rows())
            raise(Errc::dimension_mismatch, "columns of unequal dimension");
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vector Matrix::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_column(std::size_t j, const Vector& v) {
    if (v.dim() != rows_) raise(Errc::dimension_mismatch, "set_column dimension");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << (*this)(i, j);
        }
        os << "\n";
    }
    return os.str();
}

Vector mat_vec(const Matrix& m, const Vector& v, OpCounters* tally) {
    if (m.cols() != v.dim()) raise(Errc::dimension_mismatch, "mat_vec");
    Vector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational acc;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero() || v[j].is_zero()) continue;
            acc += m(i, j) * v[j];
        }
        out[i] = acc;
    }
    if (tally) ++tally->mat_vec;
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) raise(Errc::dimension_mismatch, "mat_mul");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b(k, j).is_zero()) continue;
                out(i, j) += aik * b(k, j);
            }
        }
    return out;
}

Vector vec_add(const Vector& a, const Vector& b) {
    if (a.dim() != b.dim()) raise(Errc::dimension_mismatch, "vec_add");
    Vector out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vector vec_scale(const Rational& c, const Vector& v) {
    Vector out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) out[i] = c * v[i];
    return out;
}

Vector apply_shifted_power(const Matrix& a, const Rational& lambda, std::size_t k, Vector w,
                           OpCounters* tally) {
    if (!a.is_square() || a.cols() != w.dim()) raise(Errc::dimension_mismatch, "apply_shifted_power");
    for (std::size_t step = 0; step < k; ++step) {
        Vector next = mat_vec(a, w, tally);
        if (!lambda.is_zero())
            for (std::size_t i = 0; i < w.dim(); ++i) next[i] -= lambda * w[i];
        w = std::move(next);
    }
    return w;
}

Matrix shifted(const Matrix& a, const Rational& lambda) {
    if (!a.is_square()) raise(Errc::dimension_mismatch, "shifted");
    Matrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, i) -= lambda;
    return out;
}

namespace {

// Reduced row echelon form in place; returns the pivot columns. First
// nonzero entry in the scan column is the pivot -- magnitude heuristics are
// meaningless over exact rationals, and a fixed rule keeps every downstream
// basis deterministic.
std::vector<std::size_t> rref_in_place(Matrix& m) {
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(row, pivot);

        const Rational inv = m(row, col).inv();
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;

        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const Rational factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

} // namespace

std::vector<Vector> kernel_basis(const Matrix& m, OpCounters* tally) {
    if (!m.is_square()) raise(Errc::dimension_mismatch, "kernel_basis expects a square matrix");
    if (tally) ++tally->kernels;

    Matrix work = m;
    const std::vector<std::size_t> pivots = rref_in_place(work);

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<Vector> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        Vector v(m.cols());
        v[free_col] = Rational(1);
        for (std::size_t p = 0; p < pivots.size(); ++p)
            v[pivots[p]] = -work(p, free_col);
        basis.push_back(std::move(v));
    }

    // Rank-nullity must hold exactly on every kernel computation.
    if (pivots.size() + basis.size() != m.cols())
        raise(Errc::internal, "rank-nullity violated in kernel_basis");
    return basis;
}

namespace {

// Fraction-free (Bareiss) elimination on an integer copy; rows are scaled by
// their denominator lcm first, which changes neither rank nor the zero
// pattern. Returns {rank, determinant of the original matrix} -- the
// determinant slot is only meaningful for square full-rank inputs.
struct EliminationResult {
    std::size_t rank = 0;
    Rational det;
};

EliminationResult bareiss_eliminate(const Matrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<mpz_class> a(rows * cols);
    mpq_class scale = 1; // product of row scalings, to undo in the determinant
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).denominator().get_mpz_t());
        scale *= l;
        for (std::size_t j = 0; j < cols; ++j) {
            mpq_class v = m(i, j).raw() * l;
            a[i * cols + j] = v.get_num();
        }
    }

    auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * cols + j]; };

    mpz_class prev = 1;
    int sign = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && at(pivot, col) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != row) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(at(row, j), at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class t = at(i, j) * at(row, col) - at(i, col) * at(row, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, col) = 0;
        }
        prev = at(row, col);
        ++row;
    }

    EliminationResult result;
    result.rank = row;
    if (rows == cols && row == rows) {
        // Bareiss leaves the true (scaled) determinant as the last pivot.
        mpq_class d(prev * sign);
        result.det = Rational(mpq_class(d / scale));
    }
    return result;
}

} // namespace

std::size_t rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return bareiss_eliminate(m).rank;
}

Rational determinant(const Matrix& m) {
    if (!m.is_square()) raise(Errc::dimension_mismatch, "determinant");
    if (m.rows() == 0) return Rational(1);
    EliminationResult r = bareiss_eliminate(m);
    if (r.rank < m.rows()) return Rational(0);
    return r.det;
}

bool independent_of(const std::vector<Vector>& candidates, const std::vector<Vector>& existing) {
    if (candidates.empty()) return true;
    const std::size_t dim = candidates[0].dim();
    for (const auto& v : candidates)
        if (v.dim() != dim) raise(Errc::dimension_mismatch, "independent_of");
    for (const auto& v : existing)
        if (v.dim() != dim) raise(Errc::dimension_mismatch, "independent_of");

#ifndef NDEBUG
    if (!existing.empty())
        assert(rank(Matrix::from_columns(existing)) == existing.size());
#endif

    std::vector<Vector> all = existing;
    all.insert(all.end(), candidates.begin(), candidates.end());
    if (all.size() > dim) return false;
    return rank(Matrix::from_columns(all)) == all.size();
}

} // namespace jcf
