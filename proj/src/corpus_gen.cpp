#include "jcf/corpus_gen.hpp"

#include <algorithm>
#include <random>

namespace jcf {

std::size_t StructureSpec::dimension() const {
    std::size_t n = 0;
    for (const auto& [lambda, sizes] : eigen_blocks)
        for (std::size_t s : sizes) n += s;
    return n;
}

Spectrum StructureSpec::spectrum() const {
    Spectrum spectrum;
    for (const auto& [lambda, sizes] : eigen_blocks) {
        std::size_t mult = 0;
        for (std::size_t s : sizes) mult += s;
        spectrum.factors.push_back(SpectrumFactor{lambda, mult});
    }
    return spectrum;
}

JordanStructure StructureSpec::structure() const {
    JordanStructure structure;
    for (const auto& [lambda, sizes] : eigen_blocks) {
        EigenvalueStructure e;
        e.eigenvalue = lambda;
        e.block_sizes = sizes;
        std::sort(e.block_sizes.rbegin(), e.block_sizes.rend());
        e.weyr_deltas.assign(e.block_sizes.front(), 0);
        for (std::size_t size : e.block_sizes)
            for (std::size_t s = 0; s < size; ++s) ++e.weyr_deltas[s];
        structure.entries.push_back(std::move(e));
    }
    return structure;
}

namespace {

void validate(const StructureSpec& spec) {
    if (spec.eigen_blocks.empty()) raise(Errc::internal, "empty structure spec");
    for (std::size_t i = 0; i < spec.eigen_blocks.size(); ++i) {
        if (spec.eigen_blocks[i].second.empty())
            raise(Errc::internal, "eigenvalue without blocks in structure spec");
        for (std::size_t s : spec.eigen_blocks[i].second)
            if (s == 0) raise(Errc::internal, "zero block size in structure spec");
        for (std::size_t k = i + 1; k < spec.eigen_blocks.size(); ++k)
            if (spec.eigen_blocks[i].first == spec.eigen_blocks[k].first)
                raise(Errc::internal, "repeated eigenvalue in structure spec");
    }
    if (spec.entry_bound < 1) raise(Errc::internal, "entry bound must be positive");
}

Matrix jordan_matrix_of(const StructureSpec& spec) {
    const std::size_t n = spec.dimension();
    Matrix j(n, n);
    std::size_t col = 0;
    for (const auto& [lambda, sizes] : spec.eigen_blocks)
        for (std::size_t size : sizes) {
            for (std::size_t t = 0; t < size; ++t) {
                j(col + t, col + t) = lambda;
                if (t > 0) j(col + t - 1, col + t) = Rational(1);
            }
            col += size;
        }
    return j;
}

// Shared body: forbid_source < n restricts row operations so that column
// `fixed_col` of Q keeps its single nonzero entry.
GeneratedInstance build(const StructureSpec& spec, std::size_t swap_a, std::size_t swap_b,
                        std::size_t forbid_source) {
    validate(spec);
    const std::size_t n = spec.dimension();

    GeneratedInstance inst;
    inst.j = jordan_matrix_of(spec);
    inst.q = Matrix::identity(n);
    inst.q_inv = Matrix::identity(n);

    if (swap_a != swap_b) {
        inst.q.swap_rows(swap_a, swap_b);
        for (std::size_t i = 0; i < n; ++i) std::swap(inst.q_inv(i, swap_a), inst.q_inv(i, swap_b));
    }

    std::mt19937_64 rng(spec.prng_seed);
    const unsigned long span = 2 * static_cast<unsigned long>(spec.entry_bound) + 1;
    std::size_t applied = 0;
    while (n > 1 && applied < 3 * n) {
        const std::size_t i = rng() % n;
        const std::size_t jrow = rng() % n;
        if (i == jrow || jrow == forbid_source) continue;
        const long mult = static_cast<long>(rng() % span) - spec.entry_bound;
        ++applied;
        if (mult == 0) continue;
        const Rational m(mult);
        // Q <- E Q (row op), so Q^{-1} <- Q^{-1} E^{-1} (column op).
        for (std::size_t c = 0; c < n; ++c) inst.q(i, c) += m * inst.q(jrow, c);
        for (std::size_t rrow = 0; rrow < n; ++rrow)
            inst.q_inv(rrow, jrow) -= m * inst.q_inv(rrow, i);
    }

    inst.a = mat_mul(mat_mul(inst.q, inst.j), inst.q_inv);
    return inst;
}

} // namespace

GeneratedInstance generate(const StructureSpec& spec) {
    const std::size_t n = spec.dimension();
    return build(spec, 0, 0, n); // no swap, no forbidden source
}

GeneratedInstance plant_standard_basis_eigenvector(const StructureSpec& spec, std::size_t index) {
    validate(spec);
    const std::size_t n = spec.dimension();
    if (index >= n) raise(Errc::internal, "planted index out of range");
    // Column 0 of J is the first block's eigenvector column. Swapping rows
    // 0 and index of Q makes Q e_0 = e_index, and banning row `index` as an
    // operation source keeps that column untouched, so A e_index =
    // lambda_0 e_index.
    return build(spec, 0, index, index);
}

} // namespace jcf
