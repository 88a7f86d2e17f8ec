#ifndef JCF_CHAIN_ENGINE_HPP
#define JCF_CHAIN_ENGINE_HPP

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "jcf/charpoly.hpp"
#include "jcf/matrix.hpp"

namespace jcf {

/// An ordered Jordan chain for one eigenvalue, eigenvector first -- the same
/// order the vectors take as columns of the transition matrix. For a chain
/// v[0..h]: (A - lambda*I) v[0] = 0 and (A - lambda*I) v[k] = v[k-1].
struct JordanChain {
    Rational eigenvalue;
    std::vector<Vector> vectors;

    std::size_t length() const { return vectors.size(); }
    const Vector& eigenvector() const { return vectors.front(); }
};

/// Deterministic seed sequence: all-ones, then alternating +-1, then
/// pseudorandom integer vectors with entries in [-10, 10]. Every seed is
/// nonzero, and the whole sequence is a function of the PRNG seed.
class SeedPolicy {
  public:
    SeedPolicy(std::size_t dim, std::uint64_t prng_seed) : dim_(dim), rng_(prng_seed) {}

    Vector next();
    std::size_t issued() const { return issued_; }

  private:
    std::size_t dim_;
    std::size_t issued_ = 0;
    std::mt19937_64 rng_;
};

using ExponentOverrides = std::map<Rational, std::size_t>;

/// Removes every other eigenvalue's generalized-eigenspace component from w
/// by applying (A - lambda_k I)^{p_k} for each k != target, leaving a vector
/// in G_A(target). p_k defaults to the algebraic multiplicity j_k; a known
/// maximal chain length in `overrides` shrinks the exponent. Throws
/// Errc::zero_projection when w had no component in G_A(target).
Vector project_onto_eigenspace(const Matrix& a, const Spectrum& spectrum, const Rational& target,
                               const Vector& w, const ExponentOverrides& overrides,
                               OpCounters* tally = nullptr);

/// Applies (A - lambda*I) repeatedly to the seed until the zero vector
/// appears, collecting the chain (eigenvector first). Throws
/// Errc::cap_exceeded if the seed survives `cap` applications, which means
/// the seed was not in G_A(lambda).
JordanChain grow_chain(const Matrix& a, const Rational& lambda, const Vector& seed,
                       std::size_t cap, OpCounters* tally = nullptr);

/// Chain linkage and nonzero checks against A; cheap enough to run on every
/// produced chain.
void require_chain_linkage(const Matrix& a, const JordanChain& chain);

struct HarvestLog {
    std::size_t seeds_tried = 0;
    std::vector<std::string> probe_outcomes;
    std::vector<std::size_t> chain_lengths;
};

/// Steps A.1-A.5 plus the C.1 multiple-maximal-chain probes for a single
/// eigenvalue. Returns one or more chains of equal maximal length. Probing
/// for further maximal chains continues while the unfound multiplicity could
/// still hold one (j - b >= Jc) and stops after two dependent probes; the
/// completion phase picks up whatever remains.
std::vector<JordanChain> harvest_maximal_chains(const Matrix& a, const Spectrum& spectrum,
                                                const Rational& lambda, SeedPolicy& policy,
                                                std::vector<JordanChain> found_so_far,
                                                const ExponentOverrides& overrides,
                                                OpCounters* tally = nullptr,
                                                HarvestLog* log = nullptr);

/// Indices k (0-based) for which the standard basis vector e_k is an
/// eigenvector of A, paired with the eigenvalue; these indices are avoided
/// when the completion phase pads the transition matrix with standard basis
/// columns.
std::vector<std::pair<std::size_t, Rational>> screen_standard_basis(const Matrix& a,
                                                                    const Spectrum& spectrum);

} // namespace jcf

#endif
