#ifndef JCF_MATRIX_HPP
#define JCF_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "jcf/rational.hpp"

namespace jcf {

/// Tallies of the operations the algorithm trades against each other.
/// Callers that care pass a tally into the metered entry points; a null
/// tally skips counting.
struct OpCounters {
    std::uint64_t mat_vec = 0;
    std::uint64_t solves = 0;
    std::uint64_t kernels = 0;
};

class Vector {
  public:
    Vector() = default;
    explicit Vector(std::size_t dim) : entries_(dim) {}
    explicit Vector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

    std::size_t dim() const { return entries_.size(); }
    Rational& operator[](std::size_t i) { return entries_[i]; }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }

    bool is_zero() const;

    friend bool operator==(const Vector& a, const Vector& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

    static Vector unit(std::size_t dim, std::size_t index);

    std::string str() const;

  private:
    std::vector<Rational> entries_;
};

/// Dense row-major matrix of exact rationals. Sparsity in the algorithm is
/// exploited by operating on small or structured operands, never by a
/// special storage format.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_columns(const std::vector<Vector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector column(std::size_t j) const;
    void set_column(std::size_t j, const Vector& v);
    void swap_rows(std::size_t a, std::size_t b);

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string str() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Vector mat_vec(const Matrix& m, const Vector& v, OpCounters* tally = nullptr);
Matrix mat_mul(const Matrix& a, const Matrix& b);

Vector vec_add(const Vector& a, const Vector& b);
Vector vec_scale(const Rational& c, const Vector& v);

/// (A - lambda*I)^k w as k successive matrix-vector applications; the shifted
/// matrix is never formed. k = 0 returns w unchanged.
Vector apply_shifted_power(const Matrix& a, const Rational& lambda, std::size_t k, Vector w,
                           OpCounters* tally = nullptr);

/// A - lambda*I, materialized (used where a whole-matrix operand is needed,
/// e.g. kernel filtrations).
Matrix shifted(const Matrix& a, const Rational& lambda);

/// Basis of the nullspace as the canonical free-variable solutions of the
/// reduced row echelon form. Deterministic: vectors ordered by free column.
std::vector<Vector> kernel_basis(const Matrix& m, OpCounters* tally = nullptr);

std::size_t rank(const Matrix& m);

Rational determinant(const Matrix& m);

/// True iff span(existing + candidates) has dimension
/// |existing| + |candidates|. `existing` is assumed independent (checked in
/// debug builds only).
bool independent_of(const std::vector<Vector>& candidates, const std::vector<Vector>& existing);

} // namespace jcf

#endif
