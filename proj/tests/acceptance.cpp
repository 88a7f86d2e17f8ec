// Acceptance suite: every criterion exact, one verdict line each.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "jcf/chain_engine.hpp"
#include "jcf/completion_solver.hpp"
#include "jcf/corpus_gen.hpp"
#include "jcf/incremental_lu.hpp"
#include "jcf/matrix_io.hpp"
#include "jcf/oracle.hpp"
#include "jcf/pipeline.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"

using namespace jcf;

namespace {

int g_failures = 0;

void verdict(int id, const std::string& name, bool pass, const std::string& note = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", id, name.c_str(),
                note.empty() ? "" : " -- ", note.c_str());
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// The pipeline's chain phase, reproduced so the completion phase can be
// driven and checked step by step from outside.
std::vector<JordanChain> harvest_all(const Matrix& a, const Spectrum& s, std::uint64_t seed) {
    std::vector<std::size_t> order(s.factors.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return s.factors[x].multiplicity > s.factors[y].multiplicity;
    });

    ExponentOverrides overrides;
    std::vector<JordanChain> chains;
    for (std::size_t k : order) {
        SeedPolicy policy(a.rows(), seed + 0x9e3779b97f4a7c15ull * (k + 1));
        auto got = harvest_maximal_chains(a, s, s.factors[k].eigenvalue, policy, {}, overrides);
        overrides[s.factors[k].eigenvalue] = got.front().length();
        for (auto& c : got) chains.push_back(std::move(c));
    }
    return chains;
}

void criterion_1_golden() {
    const auto start = std::chrono::steady_clock::now();
    const Matrix& a = support::golden10();

    Spectrum expected_spectrum;
    expected_spectrum.factors.push_back(SpectrumFactor{Rational(2), 4});
    expected_spectrum.factors.push_back(SpectrumFactor{Rational(3), 6});
    const bool charpoly_ok = characteristic_polynomial(a) == expected_spectrum.expand();

    const PipelineReport r = run_pipeline(a);

    // Block layout in pipeline column order: 4@3, 3@2, 1@2, 2@3.
    const std::vector<std::pair<Rational, std::size_t>> expected_blocks{
        {Rational(3), 4}, {Rational(2), 3}, {Rational(2), 1}, {Rational(3), 2}};
    bool blocks_ok = true;
    std::size_t col = 0;
    for (const auto& [lambda, size] : expected_blocks) {
        for (std::size_t t = 0; t < size && blocks_ok; ++t) {
            blocks_ok = r.j(col + t, col + t) == lambda;
            if (t > 0) blocks_ok = blocks_ok && r.j(col + t - 1, col + t) == Rational(1);
        }
        if (blocks_ok && col + size < a.rows())
            blocks_ok = r.j(col + size - 1, col + size).is_zero();
        col += size;
    }
    blocks_ok = blocks_ok && col == a.rows();

    const bool verified = r.verification.pass();
    const double elapsed = seconds_since(start);
    verdict(1, "golden 10x10 reproduction", charpoly_ok && blocks_ok && verified && elapsed < 5.0,
            "charpoly " + std::string(charpoly_ok ? "ok" : "BAD") + ", blocks " +
                (blocks_ok ? "ok" : "BAD") + ", verified " + (verified ? "ok" : "BAD") + ", " +
                std::to_string(elapsed) + "s");
}

void criterion_2_chain_efficiency() {
    const PipelineReport r = run_pipeline(support::golden10());
    const bool ok = r.chain_vector_count == 7 && r.n == 10 &&
                    r.counters_chain_phase.solves == 0 && r.counters_chain_phase.kernels == 0 &&
                    r.counters_chain_phase.mat_vec > 0;
    verdict(2, "chain phase yields 7 of 10 vectors with zero solves and zero kernels", ok,
            std::to_string(r.chain_vector_count) + "/10 vectors, solves " +
                std::to_string(r.counters_chain_phase.solves) + ", kernels " +
                std::to_string(r.counters_chain_phase.kernels));
}

void criterion_3_oracle_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    std::size_t passed = 0;
    const std::size_t total = 200;
    for (std::size_t i = 0; i < total; ++i) {
        const StructureSpec spec = support::corpus_spec(i);
        const GeneratedInstance inst = generate(spec);
        const PipelineReport r = run_pipeline(inst.a);
        const JordanStructure oracle = structure_by_filtration(inst.a, spec.spectrum());
        if (r.verification.pass() &&
            structures_equal(structure_of_jordan_matrix(r.j), oracle) &&
            structures_equal(oracle, spec.structure()))
            ++passed;
    }
    const double elapsed = seconds_since(start);
    verdict(3, "200-matrix corpus: pipeline structure equals oracle and verification passes",
            passed == total && elapsed < 60.0,
            std::to_string(passed) + "/200, " + std::to_string(elapsed) + "s");
}

void criterion_4_projection_depths() {
    std::size_t checked = 0, correct = 0;
    for (std::size_t i = 0; i < 50; ++i) {
        StructureSpec spec = support::corpus_spec(500 + i);
        const GeneratedInstance inst = generate(spec);
        const Spectrum s = spec.spectrum();
        std::mt19937_64 rng(0xDEEC0DE + i);

        // Plant one component per eigenvalue at a known depth: the column of
        // Q at that depth inside the eigenvalue's largest block.
        std::vector<std::size_t> depths(spec.eigen_blocks.size());
        Vector w(inst.a.rows());
        std::size_t col = 0;
        for (std::size_t f = 0; f < spec.eigen_blocks.size(); ++f) {
            const auto& sizes = spec.eigen_blocks[f].second;
            depths[f] = 1 + rng() % sizes.front(); // sizes are sorted descending
            w = vec_add(w, inst.q.column(col + depths[f] - 1));
            for (std::size_t b = 0; b < sizes.size(); ++b) col += sizes[b];
        }

        for (std::size_t f = 0; f < spec.eigen_blocks.size(); ++f) {
            const Rational lambda = spec.eigen_blocks[f].first;
            ++checked;
            try {
                const Vector projected = project_onto_eigenspace(inst.a, s, lambda, w, {});
                if (support::depth_of(inst.a, lambda, projected,
                                      s.factors[f].multiplicity + 1) == depths[f])
                    ++correct;
            } catch (const Error&) {
                // zero projection or depth overflow: counted as incorrect
            }
        }
    }
    verdict(4, "projected seeds keep their planted component depth", checked == correct,
            std::to_string(correct) + "/" + std::to_string(checked));
}

void criterion_5_first_seed_proxy() {
    std::size_t pairs = 0, first_seed_hits = 0, budget_hits = 0;
    for (std::size_t i = 0; i < 200; ++i) {
        const StructureSpec spec = support::corpus_spec(i);
        const GeneratedInstance inst = generate(spec);
        const Spectrum s = spec.spectrum();
        const JordanStructure prescribed = spec.structure();

        for (std::size_t f = 0; f < s.factors.size(); ++f) {
            const Rational lambda = s.factors[f].eigenvalue;
            const std::size_t max_block = prescribed.find(lambda)->block_sizes.front();
            ++pairs;

            try {
                const Vector projected = project_onto_eigenspace(
                    inst.a, s, lambda, support::ones(inst.a.rows()), {});
                if (grow_chain(inst.a, lambda, projected, s.factors[f].multiplicity).length() ==
                    max_block)
                    ++first_seed_hits;
            } catch (const Error&) {
                // zero projection: the all-ones seed missed this eigenspace
            }

            SeedPolicy policy(inst.a.rows(), 70000 + i);
            const auto chains = harvest_maximal_chains(inst.a, s, lambda, policy, {}, {});
            if (chains.front().length() == max_block) ++budget_hits;
        }
    }
    const double rate = static_cast<double>(first_seed_hits) / static_cast<double>(pairs);
    verdict(5, "all-ones seed finds the maximal chain on the first try >= 95%, budget 100%",
            rate >= 0.95 && budget_hits == pairs,
            "first-seed " + std::to_string(first_seed_hits) + "/" + std::to_string(pairs) +
                ", budget " + std::to_string(budget_hits) + "/" + std::to_string(pairs));
}

void criterion_6_incremental_lu() {
    std::mt19937_64 rng(0x1CEB00DA);
    std::size_t done = 0, ok = 0, raw_prefix_cases = 0;
    while (done < 100) {
        const std::size_t n = 4 + rng() % 5;
        const std::size_t r = 1 + rng() % (n - 1);

        Matrix m(n, n);
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t i = 0; i < n; ++i)
                m(i, j) = rng() % 3 == 0 ? Rational(0)
                                         : Rational(static_cast<long>(rng() % 11) - 5);
        for (std::size_t j = r; j < n; ++j) m(j, j) = Rational(1);
        if (rank(m) != n) continue;

        const std::size_t replace = 1 + rng() % (n - r);
        Matrix mutated = m;
        std::vector<Vector> new_cols;
        for (std::size_t k = 0; k < replace; ++k) {
            Vector col(n);
            for (std::size_t i = 0; i < n; ++i)
                col[i] = rng() % 3 == 0 ? Rational(0)
                                        : Rational(static_cast<long>(rng() % 11) - 5);
            mutated.set_column(r + k, col);
            new_cols.push_back(std::move(col));
        }
        if (rank(mutated) != n) continue;
        ++done;

        const LUFactors f = lu_decompose(m);
        const LUFactors updated = lu_update_columns(f, r, new_cols);
        const LUFactors fresh = lu_decompose(mutated);

        bool case_ok = updated.lower == fresh.lower && updated.upper == fresh.upper &&
                       updated.perm == fresh.perm && updated.pivot_seq == fresh.pivot_seq;

        // Prefix reuse: settled upper columns bit-identical; settled lower
        // multipliers bit-identical in mid-state form, and raw whenever the
        // continuation swaps match (pivoting may relocate multiplier rows).
        for (std::size_t j = 0; j < r && case_ok; ++j)
            for (std::size_t i = 0; i < n && case_ok; ++i)
                case_ok = updated.upper(i, j) == f.upper(i, j);
        case_ok = case_ok && support::midstate_lower_prefix(updated, r) ==
                                 support::midstate_lower_prefix(f, r);
        if (std::equal(updated.pivot_seq.begin() + r, updated.pivot_seq.end(),
                       f.pivot_seq.begin() + r, f.pivot_seq.end())) {
            ++raw_prefix_cases;
            for (std::size_t j = 0; j < r && case_ok; ++j)
                for (std::size_t i = 0; i < n && case_ok; ++i)
                    case_ok = updated.lower(i, j) == f.lower(i, j);
        }
        if (case_ok) ++ok;
    }
    verdict(6, "incremental LU update identical to fresh factors on 100 scenarios",
            ok == 100 && raw_prefix_cases > 0,
            std::to_string(ok) + "/100, raw-stable prefixes in " +
                std::to_string(raw_prefix_cases) + " cases");
}

void criterion_7_planted_eigenvectors() {
    std::size_t ok = 0;
    const std::size_t total = 20;
    for (std::size_t i = 0; i < total; ++i) {
        const std::size_t n = 4 + i % 4;
        StructureSpec spec;
        spec.eigen_blocks.emplace_back(Rational(static_cast<long>(2 + i % 3)),
                                       std::vector<std::size_t>{n - 2, 1});
        spec.eigen_blocks.emplace_back(Rational(static_cast<long>(6 + i % 2)),
                                       std::vector<std::size_t>{1});
        spec.prng_seed = 9000 + i;
        const std::size_t planted = i % n;
        const GeneratedInstance inst = plant_standard_basis_eigenvector(spec, planted);

        const PipelineReport r = run_pipeline(inst.a);
        bool tails_avoid = true;
        for (std::size_t k : r.initial_tail_indices) tails_avoid = tails_avoid && k != planted;
        bool screened = false;
        for (const auto& [k, lambda] : r.screened) screened |= k == planted;

        if (r.verification.pass() && tails_avoid && screened && !r.iterations.empty()) ++ok;
    }
    verdict(7, "planted standard-basis eigenvectors: pipeline passes and tails avoid them",
            ok == total, std::to_string(ok) + "/" + std::to_string(total));
}

void criterion_8_master_invariant() {
    std::size_t checks = 0, violations = 0, completions = 0;
    for (std::size_t i = 0; i < 200; ++i) {
        const StructureSpec spec = support::corpus_spec(i);
        const GeneratedInstance inst = generate(spec);
        const Spectrum s = spec.spectrum();

        const std::vector<JordanChain> chains = harvest_all(inst.a, s, 0);
        std::size_t found = 0;
        for (const auto& c : chains) found += c.length();
        if (found == inst.a.rows()) continue;
        ++completions;

        PartialDecomposition pd =
            init_partial(inst.a, chains, s, screen_standard_basis(inst.a, s));
        ++checks;
        if (mat_mul(inst.a, pd.p_matrix) != mat_mul(pd.p_matrix, pd.j_matrix)) ++violations;
        while (pd.total_remaining() > 0) {
            pd = absorb_block(pd, next_block(pd, s), inst.a);
            ++checks;
            if (mat_mul(inst.a, pd.p_matrix) != mat_mul(pd.p_matrix, pd.j_matrix)) ++violations;
        }
    }
    verdict(8, "A*P_i = P_i*J_i after init and every absorb across the corpus",
            violations == 0 && checks > 0 && completions > 0,
            std::to_string(checks) + " checks over " + std::to_string(completions) +
                " completion runs, " + std::to_string(violations) + " violations");
}

} // namespace

int main() {
    struct Entry {
        int id;
        const char* name;
        void (*fn)();
    };
    const Entry entries[] = {
        {1, "golden 10x10 reproduction", criterion_1_golden},
        {2, "chain phase efficiency", criterion_2_chain_efficiency},
        {3, "oracle equivalence", criterion_3_oracle_equivalence},
        {4, "projection depth preservation", criterion_4_projection_depths},
        {5, "first-seed maximality proxy", criterion_5_first_seed_proxy},
        {6, "incremental LU equivalence", criterion_6_incremental_lu},
        {7, "planted standard-basis eigenvectors", criterion_7_planted_eigenvectors},
        {8, "master invariant", criterion_8_master_invariant},
    };
    for (const auto& entry : entries) {
        try {
            entry.fn();
        } catch (const std::exception& e) {
            verdict(entry.id, entry.name, false, std::string("exception: ") + e.what());
        }
    }
    if (g_failures == 0) std::printf("all acceptance criteria passed\n");
    return g_failures == 0 ? 0 : 1;
}
