#ifndef JCF_PIPELINE_HPP
#define JCF_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jcf/chain_engine.hpp"
#include "jcf/charpoly.hpp"
#include "jcf/completion_solver.hpp"
#include "jcf/matrix.hpp"
#include "jcf/oracle.hpp"

namespace jcf {

enum class OutputFormat { plain, json };

struct PipelineOptions {
    /// User-supplied spectrum. Not trusted: the characteristic polynomial is
    /// still computed and the expansion compared; a mismatch aborts.
    std::optional<Spectrum> spectrum;
    std::uint64_t prng_seed = 0;
    bool trace = false; // stream stage lines to stderr while running
};

struct ChainPhaseLog {
    Rational eigenvalue;
    std::size_t multiplicity = 0;
    HarvestLog harvest;
};

struct PipelineReport {
    std::size_t n = 0;
    std::string input_digest;
    Polynomial char_poly;
    Spectrum spectrum;
    std::vector<std::pair<std::size_t, Rational>> screened;

    std::vector<ChainPhaseLog> chain_phase;
    std::size_t chain_vector_count = 0;

    std::vector<std::size_t> initial_tail_indices; // empty when no completion phase ran
    std::vector<CompletionLog> iterations;

    Matrix p, j, p_inv;
    VerifyReport verification;

    OpCounters counters_chain_phase; // snapshot taken before any completion work
    OpCounters counters_total;
};

/// Full run: spectrum, standard-basis screen, maximal chains per eigenvalue
/// (largest multiplicity first, so discovered chain lengths shrink later
/// projection exponents), then either the direct finish or the
/// init/next/absorb completion loop, and an exact verification verdict.
PipelineReport run_pipeline(const Matrix& a, const PipelineOptions& opts = {});

std::string emit(const PipelineReport& report, OutputFormat format);

} // namespace jcf

#endif
