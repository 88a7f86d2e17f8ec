#include "jcf/chain_engine.hpp"

#include <algorithm>

namespace jcf {

Vector SeedPolicy::next() {
    ++issued_;
    if (issued_ == 1) {
        Vector v(dim_);
        for (std::size_t i = 0; i < dim_; ++i) v[i] = Rational(1);
        return v;
    }
    if (issued_ == 2) {
        Vector v(dim_);
        for (std::size_t i = 0; i < dim_; ++i) v[i] = Rational(i % 2 == 0 ? 1 : -1);
        return v;
    }
    for (;;) {
        Vector v(dim_);
        bool nonzero = false;
        for (std::size_t i = 0; i < dim_; ++i) {
            // Raw engine output keeps the sequence identical across standard
            // libraries, unlike uniform_int_distribution.
            const long entry = static_cast<long>(rng_() % 21) - 10;
            v[i] = Rational(entry);
            nonzero = nonzero || entry != 0;
        }
        if (nonzero) return v;
    }
}

Vector project_onto_eigenspace(const Matrix& a, const Spectrum& spectrum, const Rational& target,
                               const Vector& w, const ExponentOverrides& overrides,
                               OpCounters* tally) {
    if (!spectrum.index_of(target))
        raise(Errc::internal, "projection target is not in the spectrum");
    if (w.is_zero()) raise(Errc::internal, "projection of the zero vector");

    Vector result = w;
    for (const auto& factor : spectrum.factors) {
        if (factor.eigenvalue == target) continue;
        const auto it = overrides.find(factor.eigenvalue);
        const std::size_t exponent = it != overrides.end() ? it->second : factor.multiplicity;
        result = apply_shifted_power(a, factor.eigenvalue, exponent, std::move(result), tally);
    }
    if (result.is_zero())
        raise(Errc::zero_projection, "seed has no component for eigenvalue " + target.str());
    return result;
}

JordanChain grow_chain(const Matrix& a, const Rational& lambda, const Vector& seed,
                       std::size_t cap, OpCounters* tally) {
    if (seed.is_zero()) raise(Errc::internal, "grow_chain requires a nonzero seed");

    std::vector<Vector> forward{seed};
    for (;;) {
        Vector next = apply_shifted_power(a, lambda, 1, forward.back(), tally);
        if (next.is_zero()) break;
        if (forward.size() == cap)
            raise(Errc::cap_exceeded, "(A - " + lambda.str() + "I)^" + std::to_string(cap) +
                                          " does not annihilate the seed");
        forward.push_back(std::move(next));
    }

    JordanChain chain;
    chain.eigenvalue = lambda;
    chain.vectors.assign(forward.rbegin(), forward.rend());
    require_chain_linkage(a, chain);
    return chain;
}

void require_chain_linkage(const Matrix& a, const JordanChain& chain) {
    if (chain.vectors.empty()) raise(Errc::internal, "empty chain");
    for (std::size_t k = 0; k < chain.vectors.size(); ++k) {
        if (chain.vectors[k].is_zero()) raise(Errc::internal, "zero vector in chain");
        const Vector image = apply_shifted_power(a, chain.eigenvalue, 1, chain.vectors[k]);
        if (k == 0) {
            if (!image.is_zero()) raise(Errc::internal, "chain head is not an eigenvector");
        } else if (image != chain.vectors[k - 1]) {
            raise(Errc::internal, "chain linkage broken at position " + std::to_string(k));
        }
    }
}

namespace {

std::vector<Vector> all_vectors(const std::vector<JordanChain>& chains) {
    std::vector<Vector> flat;
    for (const auto& c : chains) flat.insert(flat.end(), c.vectors.begin(), c.vectors.end());
    return flat;
}

} // namespace

std::vector<JordanChain> harvest_maximal_chains(const Matrix& a, const Spectrum& spectrum,
                                                const Rational& lambda, SeedPolicy& policy,
                                                std::vector<JordanChain> found_so_far,
                                                const ExponentOverrides& overrides,
                                                OpCounters* tally, HarvestLog* log) {
    const auto idx = spectrum.index_of(lambda);
    if (!idx) raise(Errc::internal, "harvest target is not in the spectrum");
    const std::size_t multiplicity = spectrum.factors[*idx].multiplicity;
    const std::size_t budget = a.rows() + 4;

    HarvestLog scratch;
    HarvestLog& out = log ? *log : scratch;

    auto next_projected_chain = [&]() -> JordanChain {
        for (std::size_t attempt = 0; attempt < budget; ++attempt) {
            const Vector seed = policy.next();
            ++out.seeds_tried;
            Vector projected;
            try {
                projected = project_onto_eigenspace(a, spectrum, lambda, seed, overrides, tally);
            } catch (const Error& e) {
                if (e.code() == Errc::zero_projection) {
                    out.probe_outcomes.push_back("zero-projection");
                    continue;
                }
                throw;
            }
            return grow_chain(a, lambda, projected, multiplicity, tally);
        }
        raise(Errc::seed_exhaustion, std::to_string(budget) +
                                         " consecutive zero projections for eigenvalue " +
                                         lambda.str());
    };

    std::vector<JordanChain> accepted = std::move(found_so_far);
    std::size_t max_len = 0;
    for (const auto& c : accepted) max_len = std::max(max_len, c.length());

    // Seeds with a zero coefficient on the deepest basis layer grow a chain
    // that is not maximal, and nothing in the chain itself betrays that. A
    // probability-zero event over the complex field, but a real one for
    // discrete seeds, so the claimed maximum counts how many independent
    // seeds have witnessed it. A chain that already exhausts the algebraic
    // multiplicity needs no witnesses beyond itself.
    std::size_t evidence = accepted.empty() ? 0 : 1;

    if (accepted.empty()) {
        JordanChain first = next_projected_chain();
        max_len = first.length();
        evidence = 1;
        out.probe_outcomes.push_back("chain of length " + std::to_string(max_len));
        accepted.push_back(std::move(first));
    }

    std::size_t basis_count = 0;
    for (const auto& c : accepted) basis_count += c.length();

    auto restart_from = [&](JordanChain&& longer, const char* stage) {
        out.probe_outcomes.push_back(std::string(stage) + ": longer chain of length " +
                                     std::to_string(longer.length()) + ", restarting");
        max_len = longer.length();
        basis_count = longer.length();
        accepted.clear();
        accepted.push_back(std::move(longer));
        evidence = 1;
    };

    for (bool settled = false; !settled;) {
        settled = true;

        std::size_t dependent_probes = 0;
        while (multiplicity - basis_count >= max_len && dependent_probes < 2) {
            JordanChain probe = next_projected_chain();

            if (probe.length() > max_len) {
                restart_from(std::move(probe), "probe");
                dependent_probes = 0;
                continue;
            }
            ++evidence; // saw the claimed maximum again (or something shorter)
            if (probe.length() == max_len &&
                independent_of(probe.vectors, all_vectors(accepted))) {
                out.probe_outcomes.push_back("additional chain of length " +
                                             std::to_string(probe.length()));
                basis_count += probe.length();
                accepted.push_back(std::move(probe));
                continue;
            }
            out.probe_outcomes.push_back(probe.length() < max_len ? "short chain"
                                                                  : "dependent chain");
            ++dependent_probes;
        }

        const std::size_t required_evidence = max_len == multiplicity ? 1 : 3;
        while (evidence < required_evidence && out.seeds_tried < budget) {
            JordanChain probe = next_projected_chain();
            if (probe.length() > max_len) {
                restart_from(std::move(probe), "confirmation");
                settled = false; // the probe phase may now apply to the longer length
                break;
            }
            ++evidence;
            out.probe_outcomes.push_back("confirmed maximal length " + std::to_string(max_len));
        }
    }

    out.chain_lengths.clear();
    for (const auto& c : accepted) out.chain_lengths.push_back(c.length());
    return accepted;
}

std::vector<std::pair<std::size_t, Rational>> screen_standard_basis(const Matrix& a,
                                                                    const Spectrum& spectrum) {
    std::vector<std::pair<std::size_t, Rational>> hits;
    for (std::size_t k = 0; k < a.cols(); ++k) {
        for (const auto& factor : spectrum.factors) {
            bool is_eigen = true;
            for (std::size_t i = 0; i < a.rows() && is_eigen; ++i) {
                const Rational expected = i == k ? factor.eigenvalue : Rational(0);
                if (a(i, k) != expected) is_eigen = false;
            }
            if (is_eigen) hits.emplace_back(k, factor.eigenvalue);
        }
    }
    return hits;
}

} // namespace jcf
