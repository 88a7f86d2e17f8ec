#ifndef JCF_CORPUS_GEN_HPP
#define JCF_CORPUS_GEN_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "jcf/charpoly.hpp"
#include "jcf/matrix.hpp"
#include "jcf/oracle.hpp"

namespace jcf {

/// Recipe for a test matrix with fully prescribed Jordan structure.
struct StructureSpec {
    // Distinct eigenvalues with their block sizes, in J column order.
    std::vector<std::pair<Rational, std::vector<std::size_t>>> eigen_blocks;
    std::uint64_t prng_seed = 0;
    long entry_bound = 3; // magnitude cap for elementary-operation multipliers

    std::size_t dimension() const;
    Spectrum spectrum() const;
    JordanStructure structure() const;
};

struct GeneratedInstance {
    Matrix a;     // Q * J * Q^{-1}
    Matrix q;     // unimodular change of basis
    Matrix q_inv; // exact integer inverse
    Matrix j;     // the prescribed Jordan matrix
};

/// A = Q J Q^{-1} where Q is a product of 3n random integer elementary row
/// operations (det Q = 1, so Q^{-1} is integer and tracked exactly).
/// Deterministic in the PRNG seed.
GeneratedInstance generate(const StructureSpec& spec);

/// Like generate, but Q is constrained to map the first eigenvector column
/// of J onto e_index, so e_index is an eigenvector of A. Exercises the
/// standard-basis-eigenvector special case.
GeneratedInstance plant_standard_basis_eigenvector(const StructureSpec& spec, std::size_t index);

} // namespace jcf

#endif
