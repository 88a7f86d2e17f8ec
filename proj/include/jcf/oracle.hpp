#ifndef JCF_ORACLE_HPP
#define JCF_ORACLE_HPP

#include <string>
#include <vector>

#include "jcf/charpoly.hpp"
#include "jcf/matrix.hpp"

namespace jcf {

/// Jordan block structure per eigenvalue: the Segre characteristic (block
/// sizes, largest first) and the Weyr deltas it was derived from
/// (dim ker (A - lambda I)^s - dim ker (A - lambda I)^{s-1}).
struct EigenvalueStructure {
    Rational eigenvalue;
    std::vector<std::size_t> block_sizes;
    std::vector<std::size_t> weyr_deltas;
};

struct JordanStructure {
    std::vector<EigenvalueStructure> entries;

    const EigenvalueStructure* find(const Rational& lambda) const;
    std::string str() const;
};

/// The classical route: kernel filtration of (A - lambda I)^s on the
/// original dense matrix. Kept deliberately independent of the chain
/// pipeline as its verification baseline; no attempt is made to be fast.
JordanStructure structure_by_filtration(const Matrix& a, const Spectrum& spectrum);

/// Block structure read off an already-Jordan matrix (no kernels involved).
JordanStructure structure_of_jordan_matrix(const Matrix& j);

bool structures_equal(const JordanStructure& a, const JordanStructure& b);

struct VerifyReport {
    bool jordan_form = false;  // J is block diagonal with valid Jordan blocks
    bool similarity = false;   // A*P = P*J exactly
    bool invertible = false;   // P nonsingular
    std::string detail;

    bool pass() const { return jordan_form && similarity && invertible; }
};

/// Exact certificate for a claimed decomposition; failures are report
/// entries, never exceptions.
VerifyReport verify_decomposition(const Matrix& a, const Matrix& p, const Matrix& j);

} // namespace jcf

#endif
