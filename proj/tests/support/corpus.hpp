#ifndef JCF_TESTS_CORPUS_HPP
#define JCF_TESTS_CORPUS_HPP

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "jcf/corpus_gen.hpp"
#include "jcf/incremental_lu.hpp"
#include "jcf/matrix.hpp"

namespace support {

// Deterministic corpus of structure specs: n in 2..8, random eigenvalues and
// block partitions, one fixed seed per index.
inline jcf::StructureSpec corpus_spec(std::size_t index) {
    std::mt19937_64 rng(0xC0FFEEull * 2654435761ull + index);
    const std::size_t n = 2 + index % 7;

    const std::size_t distinct = 1 + rng() % std::min<std::size_t>(3, n);
    std::set<long> seen;
    std::vector<jcf::Rational> lambdas;
    while (lambdas.size() < distinct) {
        const long value = static_cast<long>(rng() % 13) - 6;
        if (seen.insert(value).second) lambdas.push_back(jcf::Rational(value));
    }

    // Positive multiplicities summing to n.
    std::vector<std::size_t> mults(distinct, 1);
    for (std::size_t extra = n - distinct; extra > 0; --extra) ++mults[rng() % distinct];

    jcf::StructureSpec spec;
    for (std::size_t k = 0; k < distinct; ++k) {
        std::vector<std::size_t> sizes;
        std::size_t left = mults[k];
        while (left > 0) {
            const std::size_t size = 1 + rng() % left;
            sizes.push_back(size);
            left -= size;
        }
        std::sort(sizes.rbegin(), sizes.rend());
        spec.eigen_blocks.emplace_back(lambdas[k], std::move(sizes));
    }
    spec.prng_seed = 0x5EED0000ull + index;
    spec.entry_bound = 3;
    return spec;
}

// Test-only oracle: explicit dense matrix power (the route the production
// loop form deliberately avoids).
inline jcf::Matrix matrix_power(const jcf::Matrix& m, std::size_t k) {
    jcf::Matrix acc = jcf::Matrix::identity(m.rows());
    for (std::size_t i = 0; i < k; ++i) acc = jcf::mat_mul(acc, m);
    return acc;
}

// Test-only oracle: plain Gaussian elimination solve, independent of the LU
// module.
inline jcf::Vector dense_solve(const jcf::Matrix& a, const jcf::Vector& b) {
    const std::size_t n = a.rows();
    jcf::Matrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && aug(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw std::runtime_error("dense_solve: singular");
        aug.swap_rows(col, pivot);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || aug(i, col).is_zero()) continue;
            const jcf::Rational f = aug(i, col) / aug(col, col);
            for (std::size_t j = col; j <= n; ++j) aug(i, j) -= f * aug(col, j);
        }
    }
    jcf::Vector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n) / aug(i, i);
    return x;
}

inline jcf::Matrix dense_inverse(const jcf::Matrix& a) {
    const std::size_t n = a.rows();
    jcf::Matrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j)
        inv.set_column(j, dense_solve(a, jcf::Vector::unit(n, j)));
    return inv;
}

// Multiplier columns [0, c) of f.lower as they stood after the first c
// elimination steps: undo the row swaps of later steps, newest first. Two
// factorizations that share their first c steps must agree on this exactly.
inline jcf::Matrix midstate_lower_prefix(const jcf::LUFactors& f, std::size_t c) {
    jcf::Matrix lower = f.lower;
    for (std::size_t j = f.n(); j-- > c;) {
        if (f.pivot_seq[j] == j) continue;
        for (std::size_t col = 0; col < c; ++col)
            std::swap(lower(j, col), lower(f.pivot_seq[j], col));
    }
    jcf::Matrix prefix(f.n(), c);
    for (std::size_t i = 0; i < f.n(); ++i)
        for (std::size_t j = 0; j < c; ++j) prefix(i, j) = lower(i, j);
    return prefix;
}

// Minimal annihilating exponent of v for (A - lambda I); throws if v never
// vanishes within `cap` applications.
inline std::size_t depth_of(const jcf::Matrix& a, const jcf::Rational& lambda, jcf::Vector v,
                            std::size_t cap) {
    for (std::size_t d = 0; d <= cap; ++d) {
        if (v.is_zero()) return d;
        v = jcf::apply_shifted_power(a, lambda, 1, v);
    }
    throw std::runtime_error("depth_of: vector not annihilated within cap");
}

} // namespace support

#endif
