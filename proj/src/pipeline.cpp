#include "jcf/pipeline.hpp"

#include <algorithm>
#include <iostream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "jcf/matrix_io.hpp"

namespace jcf {

namespace {

void trace_line(const PipelineOptions& opts, const std::string& line) {
    if (opts.trace) std::cerr << line << "\n";
}

} // namespace

PipelineReport run_pipeline(const Matrix& a, const PipelineOptions& opts) {
    if (!a.is_square()) raise(Errc::dimension_mismatch, "input matrix must be square");
    const std::size_t n = a.rows();
    if (n == 0) raise(Errc::dimension_error, "empty matrix");

    PipelineReport report;
    report.n = n;
    report.input_digest = matrix_digest(a);

    OpCounters counters;

    report.char_poly = characteristic_polynomial(a);
    if (opts.spectrum) {
        const Spectrum& given = *opts.spectrum;
        if (given.total_multiplicity() != n)
            raise(Errc::inconsistent_spectrum, "multiplicities sum to " +
                                                   std::to_string(given.total_multiplicity()) +
                                                   ", expected " + std::to_string(n));
        if (given.expand() != report.char_poly)
            raise(Errc::inconsistent_spectrum,
                  "supplied spectrum does not expand to the characteristic polynomial");
        report.spectrum = given;
    } else {
        report.spectrum = factor_spectrum(report.char_poly);
    }
    trace_line(opts, "spectrum: " + std::to_string(report.spectrum.factors.size()) +
                         " distinct eigenvalue(s)");

    report.screened = screen_standard_basis(a, report.spectrum);

    // Chain phase, largest multiplicity first: the maximal chain length
    // found for one eigenvalue caps the projection exponents used for every
    // later one.
    std::vector<std::size_t> order(report.spectrum.factors.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return report.spectrum.factors[x].multiplicity > report.spectrum.factors[y].multiplicity;
    });

    ExponentOverrides overrides;
    std::vector<JordanChain> chains;
    for (std::size_t idx : order) {
        const auto& factor = report.spectrum.factors[idx];
        SeedPolicy policy(n, opts.prng_seed + 0x9e3779b97f4a7c15ull * (idx + 1));

        ChainPhaseLog log;
        log.eigenvalue = factor.eigenvalue;
        log.multiplicity = factor.multiplicity;
        std::vector<JordanChain> harvested = harvest_maximal_chains(
            a, report.spectrum, factor.eigenvalue, policy, {}, overrides, &counters, &log.harvest);

        overrides[factor.eigenvalue] = harvested.front().length();
        for (const auto& c : harvested) {
            trace_line(opts, "chain length " + std::to_string(c.length()) + " for eigenvalue " +
                                 factor.eigenvalue.str());
            report.chain_vector_count += c.length();
            chains.push_back(c);
        }
        report.chain_phase.push_back(std::move(log));
    }

    report.counters_chain_phase = counters;

    if (report.chain_vector_count == n) {
        trace_line(opts, "chain phase spans the whole space; no completion needed");
        std::tie(report.p, report.j, report.p_inv) = direct_decomposition(a, chains, &counters);
    } else {
        PartialDecomposition pd = init_partial(a, chains, report.spectrum, report.screened,
                                               &counters);
        report.initial_tail_indices = pd.tail_indices;
        while (pd.total_remaining() > 0) {
            CompletionLog log;
            const JordanChain block = next_block(pd, report.spectrum, &counters, &log);
            pd = absorb_block(pd, block, a, &counters);
            trace_line(opts, "completion block of size " + std::to_string(log.block_size) +
                                 " for eigenvalue " + log.eigenvalue.str());
            report.iterations.push_back(std::move(log));
        }
        std::tie(report.p, report.j, report.p_inv) = finalize(pd, &counters);
    }

    report.counters_total = counters;
    report.verification = verify_decomposition(a, report.p, report.j);
    trace_line(opts, std::string("verification: ") +
                         (report.verification.pass() ? "pass" : "FAIL"));
    return report;
}

namespace {

std::string counters_str(const OpCounters& c) {
    std::ostringstream os;
    os << "mat-vec " << c.mat_vec << ", solves " << c.solves << ", kernels " << c.kernels;
    return os.str();
}

std::string emit_plain(const PipelineReport& r) {
    std::ostringstream os;
    os << "input: " << r.n << "x" << r.n << " matrix, digest " << r.input_digest << "\n\n";

    os << "spectrum (characteristic polynomial factors):\n";
    for (const auto& f : r.spectrum.factors)
        os << "  eigenvalue " << f.eigenvalue << " with multiplicity " << f.multiplicity << "\n";

    os << "\nstandard basis screen:";
    if (r.screened.empty()) {
        os << " no standard basis vector is an eigenvector\n";
    } else {
        os << "\n";
        for (const auto& [k, lambda] : r.screened)
            os << "  e[" << k << "] is an eigenvector for eigenvalue " << lambda << "\n";
    }

    os << "\nchain phase (matrix-vector products only):\n";
    for (const auto& log : r.chain_phase) {
        os << "  eigenvalue " << log.eigenvalue << " (multiplicity " << log.multiplicity
           << "), seeds tried " << log.harvest.seeds_tried << "\n";
        for (std::size_t len : log.harvest.chain_lengths)
            os << "    chain length " << len << " for eigenvalue " << log.eigenvalue << "\n";
        for (const auto& outcome : log.harvest.probe_outcomes)
            os << "      [" << outcome << "]\n";
    }
    os << "  chain phase found " << r.chain_vector_count << " of " << r.n
       << " basis vectors; counters: " << counters_str(r.counters_chain_phase) << "\n";

    if (r.iterations.empty()) {
        os << "\ncompletion phase: not needed\n";
    } else {
        os << "\ncompletion phase:\n  initial tail indices (0-based):";
        for (std::size_t k : r.initial_tail_indices) os << " " << k;
        os << "\n";
        for (std::size_t i = 0; i < r.iterations.size(); ++i) {
            const auto& it = r.iterations[i];
            os << "  iteration " << i + 1 << ": eigenvalue " << it.eigenvalue << "\n";
            for (std::size_t s = 0; s < it.kernel_dims.size(); ++s) {
                os << "    ker(J_" << i + 1 << " - " << it.eigenvalue << "I)";
                if (s > 0) os << "^" << s + 1;
                os << " dimension " << it.kernel_dims[s] << "\n";
            }
            os << "    block size " << it.block_size << "\n";
        }
    }

    os << "\nP =\n" << r.p.str();
    os << "\nJ =\n" << r.j.str();
    os << "\nP^-1 =\n" << r.p_inv.str();

    os << "\nverification: jordan form " << (r.verification.jordan_form ? "ok" : "FAIL")
       << "; A*P = P*J " << (r.verification.similarity ? "ok" : "FAIL") << "; P invertible "
       << (r.verification.invertible ? "ok" : "FAIL") << " => "
       << (r.verification.pass() ? "PASS" : "FAIL") << "\n";
    if (!r.verification.detail.empty()) os << "  detail: " << r.verification.detail << "\n";

    os << "counters total: " << counters_str(r.counters_total) << "\n";
    return os.str();
}

nlohmann::json matrix_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json counters_json(const OpCounters& c) {
    return {{"mat_vec", c.mat_vec}, {"solves", c.solves}, {"kernels", c.kernels}};
}

std::string emit_json(const PipelineReport& r) {
    nlohmann::json out;
    out["input"] = {{"n", r.n}, {"digest", r.input_digest}};

    out["spectrum"] = nlohmann::json::array();
    for (const auto& f : r.spectrum.factors)
        out["spectrum"].push_back({{"eigenvalue", f.eigenvalue.str()},
                                   {"multiplicity", f.multiplicity}});

    out["screened"] = nlohmann::json::array();
    for (const auto& [k, lambda] : r.screened)
        out["screened"].push_back({{"index", k}, {"eigenvalue", lambda.str()}});

    out["chains"] = nlohmann::json::array();
    for (const auto& log : r.chain_phase) {
        nlohmann::json entry = {{"eigenvalue", log.eigenvalue.str()},
                                {"multiplicity", log.multiplicity},
                                {"seeds_tried", log.harvest.seeds_tried},
                                {"lengths", log.harvest.chain_lengths},
                                {"probe_outcomes", log.harvest.probe_outcomes}};
        out["chains"].push_back(std::move(entry));
    }

    out["iterations"] = nlohmann::json::array();
    for (const auto& it : r.iterations)
        out["iterations"].push_back({{"eigenvalue", it.eigenvalue.str()},
                                     {"kernel_dims", it.kernel_dims},
                                     {"power", it.power},
                                     {"block_size", it.block_size}});

    out["initial_tail_indices"] = r.initial_tail_indices;
    out["P"] = matrix_json(r.p);
    out["J"] = matrix_json(r.j);
    out["P_inv"] = matrix_json(r.p_inv);
    out["verified"] = {{"jordan_form", r.verification.jordan_form},
                       {"similarity", r.verification.similarity},
                       {"invertible", r.verification.invertible},
                       {"pass", r.verification.pass()}};
    out["counters"] = {{"chain_phase", counters_json(r.counters_chain_phase)},
                       {"total", counters_json(r.counters_total)}};
    return out.dump(2) + "\n";
}

} // namespace

std::string emit(const PipelineReport& report, OutputFormat format) {
    return format == OutputFormat::plain ? emit_plain(report) : emit_json(report);
}

} // namespace jcf
