#ifndef JCF_COMPLETION_SOLVER_HPP
#define JCF_COMPLETION_SOLVER_HPP

#include <cstddef>
#include <tuple>
#include <vector>

#include "jcf/chain_engine.hpp"
#include "jcf/charpoly.hpp"
#include "jcf/incremental_lu.hpp"
#include "jcf/matrix.hpp"

namespace jcf {

/// Intermediate state of the block-completion iteration. The first r columns
/// of p_matrix are accepted generalized-eigenvector columns; the rest are
/// standard basis padding. j_matrix carries the matching Jordan blocks in
/// its leading region and solved filler columns on the right, so that
/// A * p_matrix = p_matrix * j_matrix holds exactly at every step.
struct PartialDecomposition {
    Spectrum spectrum;
    Matrix p_matrix;
    Matrix j_matrix;
    LUFactors lu;
    std::size_t r = 0;
    std::vector<std::size_t> tail_indices; // tail column r+t holds e_{tail_indices[t]}
    std::vector<std::size_t> remaining;    // missing basis vectors, per spectrum factor
    std::vector<std::vector<std::size_t>> accepted_block_sizes; // per spectrum factor

    std::size_t n() const { return p_matrix.rows(); }
    std::size_t total_remaining() const;
};

/// One completion iteration's trace, for reporting.
struct CompletionLog {
    Rational eigenvalue;
    std::vector<std::size_t> kernel_dims; // dim ker (J_i - lambda I)^s for s = 1..power
    std::size_t power = 0;
    std::size_t block_size = 0;
};

/// Builds P_1/J_1 from the harvested chains: chain vectors first, then
/// standard basis columns chosen greedily to complete a basis, preferring
/// tail-end indices and avoiding any index flagged by the standard-basis
/// eigenvector screen. Solves the unknown right-hand columns of J_1 through
/// the LU factors.
PartialDecomposition init_partial(const Matrix& a, const std::vector<JordanChain>& chains,
                                  const Spectrum& spectrum,
                                  const std::vector<std::pair<std::size_t, Rational>>& screen,
                                  OpCounters* tally = nullptr);

/// Extracts the largest remaining Jordan block for the eigenvalue with the
/// fewest missing basis vectors, working entirely on the sparse j_matrix:
/// kernel powers of (J_i - lambda I) locate a new chain head at maximal
/// depth, and the chain is mapped back through p_matrix. Deliberately takes
/// no view of A; absorb_block re-validates the chain against A.
JordanChain next_block(const PartialDecomposition& pd, const Spectrum& spectrum,
                       OpCounters* tally = nullptr, CompletionLog* log = nullptr);

/// Splices a chain over the leftmost tail columns, updates the LU factors
/// incrementally, re-solves the surviving filler columns, and restores the
/// master invariant A*P = P*J.
PartialDecomposition absorb_block(PartialDecomposition pd, const JordanChain& chain,
                                  const Matrix& a, OpCounters* tally = nullptr);

/// Final (P, J, P_inv) once nothing remains.
std::tuple<Matrix, Matrix, Matrix> finalize(const PartialDecomposition& pd,
                                            OpCounters* tally = nullptr);

/// The all-chains-found shortcut: P is the chain columns, J pure blocks,
/// P_inv from one factorization. Used when the chain phase already spans V.
std::tuple<Matrix, Matrix, Matrix> direct_decomposition(const Matrix& a,
                                                        const std::vector<JordanChain>& chains,
                                                        OpCounters* tally = nullptr);

/// Jordan block matrix for a list of chains, in chain order.
Matrix blocks_from_chains(const std::vector<JordanChain>& chains, std::size_t n);

} // namespace jcf

#endif
