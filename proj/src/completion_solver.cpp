#include "jcf/completion_solver.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace jcf {

std::size_t PartialDecomposition::total_remaining() const {
    std::size_t total = 0;
    for (std::size_t m : remaining) total += m;
    return total;
}

namespace {

void require_master_invariant(const Matrix& a, const PartialDecomposition& pd) {
    if (mat_mul(a, pd.p_matrix) != mat_mul(pd.p_matrix, pd.j_matrix))
        raise(Errc::internal, "master invariant A*P = P*J violated");
}

void place_jordan_block(Matrix& j, std::size_t start, std::size_t len, const Rational& lambda) {
    for (std::size_t t = 0; t < len; ++t) {
        Vector col(j.rows());
        col[start + t] = lambda;
        if (t > 0) col[start + t - 1] = Rational(1);
        j.set_column(start + t, col);
    }
}

} // namespace

Matrix blocks_from_chains(const std::vector<JordanChain>& chains, std::size_t n) {
    Matrix j(n, n);
    std::size_t col = 0;
    for (const auto& chain : chains) {
        place_jordan_block(j, col, chain.length(), chain.eigenvalue);
        col += chain.length();
    }
    return j;
}

PartialDecomposition init_partial(const Matrix& a, const std::vector<JordanChain>& chains,
                                  const Spectrum& spectrum,
                                  const std::vector<std::pair<std::size_t, Rational>>& screen,
                                  OpCounters* tally) {
    const std::size_t n = a.rows();
    std::size_t r = 0;
    for (const auto& c : chains) r += c.length();
    if (r == 0 || r >= n) raise(Errc::internal, "init_partial needs 0 < r < n");

    PartialDecomposition pd;
    pd.spectrum = spectrum;
    pd.p_matrix = Matrix(n, n);
    pd.r = r;

    std::vector<Vector> accepted;
    accepted.reserve(r);
    std::size_t col = 0;
    for (const auto& chain : chains)
        for (const auto& v : chain.vectors) {
            pd.p_matrix.set_column(col++, v);
            accepted.push_back(v);
        }

    // Complete the basis with standard basis vectors: tail-end indices first
    // so the lower-right block stays an identity, screened indices (standard
    // basis eigenvectors) last, and every pick checked for independence so
    // P_1 cannot come out singular.
    std::set<std::size_t> screened;
    for (const auto& [index, lambda] : screen) screened.insert(index);

    std::vector<std::size_t> preference;
    for (int pass = 0; pass < 2; ++pass) {
        const bool want_screened = pass == 1;
        for (std::size_t k = r; k < n; ++k)
            if ((screened.count(k) != 0) == want_screened) preference.push_back(k);
        for (std::size_t k = 0; k < r; ++k)
            if ((screened.count(k) != 0) == want_screened) preference.push_back(k);
    }

    for (std::size_t k : preference) {
        if (pd.tail_indices.size() == n - r) break;
        const Vector unit = Vector::unit(n, k);
        if (!independent_of({unit}, accepted)) continue;
        pd.p_matrix.set_column(r + pd.tail_indices.size(), unit);
        pd.tail_indices.push_back(k);
        accepted.push_back(unit);
    }
    if (pd.tail_indices.size() != n - r)
        raise(Errc::singular_matrix, "chain columns cannot be completed to a basis");

    pd.j_matrix = blocks_from_chains(chains, n);
    pd.lu = lu_decompose(pd.p_matrix);
    pd.lu.settled_cols = r;

    for (std::size_t t = 0; t < pd.tail_indices.size(); ++t) {
        const Vector u = lu_solve(pd.lu, a.column(pd.tail_indices[t]), tally);
        pd.j_matrix.set_column(r + t, u);
    }

    pd.remaining.assign(spectrum.factors.size(), 0);
    pd.accepted_block_sizes.assign(spectrum.factors.size(), {});
    for (std::size_t i = 0; i < spectrum.factors.size(); ++i)
        pd.remaining[i] = spectrum.factors[i].multiplicity;
    for (const auto& chain : chains) {
        const auto idx = spectrum.index_of(chain.eigenvalue);
        if (!idx) raise(Errc::internal, "chain eigenvalue missing from spectrum");
        if (pd.remaining[*idx] < chain.length())
            raise(Errc::inconsistent_spectrum, "chains exceed algebraic multiplicity");
        pd.remaining[*idx] -= chain.length();
        pd.accepted_block_sizes[*idx].push_back(chain.length());
    }

    require_master_invariant(a, pd);
    return pd;
}

JordanChain next_block(const PartialDecomposition& pd, const Spectrum& spectrum,
                       OpCounters* tally, CompletionLog* log) {
    if (pd.total_remaining() == 0) raise(Errc::internal, "next_block with nothing remaining");

    // The eigenvalue with the fewest missing vectors keeps the kernel powers
    // low while the matrix is at its sparsest.
    std::size_t idx = spectrum.factors.size();
    for (std::size_t i = 0; i < spectrum.factors.size(); ++i) {
        if (pd.remaining[i] == 0) continue;
        if (idx == spectrum.factors.size() || pd.remaining[i] < pd.remaining[idx]) idx = i;
    }
    const Rational lambda = spectrum.factors[idx].eigenvalue;
    const std::size_t missing = pd.remaining[idx];

    const auto accepted_at_least = [&](std::size_t s) {
        std::size_t count = 0;
        for (std::size_t size : pd.accepted_block_sizes[idx])
            if (size >= s) ++count;
        return count;
    };

    CompletionLog scratch;
    CompletionLog& out = log ? *log : scratch;
    out.eigenvalue = lambda;
    out.kernel_dims.clear();

    // Raise the kernel power until the largest remaining block is pinned
    // down: remaining blocks of size >= s are (dim ker^s - dim ker^{s-1})
    // minus the accepted blocks of size >= s, and the missing multiplicity
    // not yet attributed to some level tells us when to stop.
    const Matrix shifted_j = shifted(pd.j_matrix, lambda);
    Matrix power = shifted_j;
    std::vector<std::vector<Vector>> bases; // bases[s-1] spans ker (J - lambda I)^s
    std::size_t depth = 0;
    std::size_t excess = missing;
    bool pinned = false;

    for (std::size_t s = 1; s <= pd.n() && !pinned; ++s) {
        if (s > 1) power = mat_mul(power, shifted_j);
        std::vector<Vector> kernel = kernel_basis(power, tally);
        out.kernel_dims.push_back(kernel.size());

        const std::size_t dim_prev = s > 1 ? bases[s - 2].size() : 0;
        const std::size_t delta = kernel.size() - dim_prev;
        const std::size_t acc = accepted_at_least(s);
        if (delta < acc) raise(Errc::internal, "kernel filtration below accepted block count");
        const std::size_t new_ge = delta - acc;

        if (new_ge == 0) {
            depth = s - 1;
            pinned = true;
        } else {
            if (new_ge > excess)
                raise(Errc::inconsistent_spectrum, "kernel growth exceeds multiplicity");
            excess -= new_ge;
            bases.push_back(std::move(kernel));
            if (excess == 0) {
                depth = s;
                pinned = true;
            }
        }
    }
    if (!pinned) raise(Errc::internal, "kernel filtration failed to stabilize");
    if (depth == 0)
        raise(Errc::exhausted_eigenvalue,
              "no new kernel vector for eigenvalue " + lambda.str() + " though " +
                  std::to_string(missing) + " basis vectors remain");
    out.power = depth;
    out.block_size = depth;

    // A new chain head must leave the span of ker^{depth-1} plus the
    // accepted columns. Accepted columns are standard basis vectors in these
    // coordinates, so modding them out is dropping the first r coordinates;
    // what is left is a plain rank test on the tails.
    const std::size_t tail_dim = pd.n() - pd.r;
    auto tail_of = [&](const Vector& v) {
        Vector t(tail_dim);
        for (std::size_t i = 0; i < tail_dim; ++i) t[i] = v[pd.r + i];
        return t;
    };

    std::vector<Vector> below_tails;
    if (depth >= 2)
        for (const auto& v : bases[depth - 2]) {
            Vector t = tail_of(v);
            if (!t.is_zero() && independent_of({t}, below_tails)) below_tails.push_back(std::move(t));
        }

    const Vector* head = nullptr;
    for (const auto& v : bases[depth - 1]) {
        Vector t = tail_of(v);
        if (t.is_zero()) continue;
        if (independent_of({t}, below_tails)) {
            head = &v;
            break;
        }
    }
    if (!head) raise(Errc::internal, "kernel filtration found no independent chain head");

    std::vector<Vector> j_chain{*head};
    for (std::size_t t = 1; t < depth; ++t) {
        Vector next = mat_vec(shifted_j, j_chain.back(), tally);
        if (next.is_zero()) raise(Errc::internal, "chain head shallower than its kernel depth");
        j_chain.push_back(std::move(next));
    }
    if (!mat_vec(shifted_j, j_chain.back()).is_zero())
        raise(Errc::internal, "chain tail is not an eigenvector of J");

    JordanChain chain;
    chain.eigenvalue = lambda;
    chain.vectors.reserve(depth);
    for (std::size_t t = depth; t-- > 0;)
        chain.vectors.push_back(mat_vec(pd.p_matrix, j_chain[t], tally));
    return chain;
}

PartialDecomposition absorb_block(PartialDecomposition pd, const JordanChain& chain,
                                  const Matrix& a, OpCounters* tally) {
    const std::size_t n = pd.n();
    const std::size_t len = chain.length();
    if (len > pd.tail_indices.size()) raise(Errc::internal, "block larger than the open tail");

    const auto idx = pd.spectrum.index_of(chain.eigenvalue);
    if (!idx) raise(Errc::internal, "absorbed eigenvalue missing from spectrum");
    if (pd.remaining[*idx] < len)
        raise(Errc::inconsistent_spectrum, "block exceeds remaining multiplicity");

    // Deferred post-verification of next_block: the chain must satisfy the
    // full chain invariants against A, not merely against J_i.
    require_chain_linkage(a, chain);
    std::vector<Vector> basis;
    basis.reserve(n);
    for (std::size_t c = 0; c < pd.r; ++c) basis.push_back(pd.p_matrix.column(c));
    if (!independent_of(chain.vectors, basis))
        raise(Errc::internal, "completion chain depends on accepted columns");
    basis.insert(basis.end(), chain.vectors.begin(), chain.vectors.end());

    // The chain normally consumes the leftmost tail columns, but it may
    // swallow the direction of a later tail vector instead; keep whichever
    // survivors still complete the basis, preferring the ones the leftmost
    // rule would keep.
    std::vector<std::size_t> survivors;
    std::vector<std::size_t> candidates(pd.tail_indices.begin() + len, pd.tail_indices.end());
    candidates.insert(candidates.end(), pd.tail_indices.begin(), pd.tail_indices.begin() + len);
    for (std::size_t k : candidates) {
        if (basis.size() == n) break;
        const Vector unit = Vector::unit(n, k);
        if (!independent_of({unit}, basis)) continue;
        survivors.push_back(k);
        basis.push_back(unit);
    }
    if (basis.size() != n)
        raise(Errc::singular_matrix, "absorbed block cannot be completed to a basis");

    std::vector<Vector> region = chain.vectors;
    for (std::size_t k : survivors) region.push_back(Vector::unit(n, k));
    pd.lu = lu_update_columns(pd.lu, pd.r, region);
    for (std::size_t t = 0; t < region.size(); ++t)
        pd.p_matrix.set_column(pd.r + t, region[t]);
    place_jordan_block(pd.j_matrix, pd.r, len, chain.eigenvalue);

    pd.tail_indices = std::move(survivors);
    pd.r += len;
    pd.remaining[*idx] -= len;
    pd.accepted_block_sizes[*idx].push_back(len);
    pd.lu.settled_cols = pd.r;

    for (std::size_t t = 0; t < pd.tail_indices.size(); ++t) {
        const Vector u = lu_solve(pd.lu, a.column(pd.tail_indices[t]), tally);
        pd.j_matrix.set_column(pd.r + t, u);
    }

    require_master_invariant(a, pd);
    return pd;
}

std::tuple<Matrix, Matrix, Matrix> finalize(const PartialDecomposition& pd, OpCounters* tally) {
    if (pd.total_remaining() != 0)
        raise(Errc::incomplete_basis, std::to_string(pd.total_remaining()) +
                                          " basis vectors still missing at finalize");
    return {pd.p_matrix, pd.j_matrix, invert(pd.lu, tally)};
}

std::tuple<Matrix, Matrix, Matrix> direct_decomposition(const Matrix& a,
                                                        const std::vector<JordanChain>& chains,
                                                        OpCounters* tally) {
    const std::size_t n = a.rows();
    std::vector<Vector> cols;
    cols.reserve(n);
    for (const auto& chain : chains)
        for (const auto& v : chain.vectors) cols.push_back(v);
    if (cols.size() != n) raise(Errc::internal, "direct decomposition needs a full basis");

    Matrix p = Matrix::from_columns(cols);
    Matrix j = blocks_from_chains(chains, n);
    LUFactors f = lu_decompose(p);
    return {p, j, invert(f, tally)};
}

} // namespace jcf
