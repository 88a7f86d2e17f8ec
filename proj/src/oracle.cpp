#include "jcf/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace jcf {

const EigenvalueStructure* JordanStructure::find(const Rational& lambda) const {
    for (const auto& e : entries)
        if (e.eigenvalue == lambda) return &e;
    return nullptr;
}

std::string JordanStructure::str() const {
    std::ostringstream os;
    for (const auto& e : entries) {
        os << "eigenvalue " << e.eigenvalue << ": blocks {";
        for (std::size_t i = 0; i < e.block_sizes.size(); ++i)
            os << (i ? "," : "") << e.block_sizes[i];
        os << "}\n";
    }
    return os.str();
}

JordanStructure structure_by_filtration(const Matrix& a, const Spectrum& spectrum) {
    if (!a.is_square()) raise(Errc::dimension_mismatch, "structure_by_filtration");
    if (spectrum.total_multiplicity() != a.rows())
        raise(Errc::inconsistent_spectrum, "multiplicities do not sum to n");

    JordanStructure structure;
    for (const auto& factor : spectrum.factors) {
        const Matrix base = shifted(a, factor.eigenvalue);
        Matrix power = base;

        std::vector<std::size_t> deltas;
        std::size_t dim_prev = 0;
        for (;;) {
            const std::size_t dim = kernel_basis(power).size();
            if (dim == dim_prev) break;
            deltas.push_back(dim - dim_prev);
            dim_prev = dim;
            if (dim_prev > factor.multiplicity)
                raise(Errc::inconsistent_spectrum,
                      "kernel of (A - " + factor.eigenvalue.str() +
                          "I)^s exceeds the algebraic multiplicity");
            if (dim_prev == factor.multiplicity) break;
            power = mat_mul(power, base);
        }
        if (dim_prev != factor.multiplicity)
            raise(Errc::inconsistent_spectrum,
                  "filtration for eigenvalue " + factor.eigenvalue.str() + " stabilized at " +
                      std::to_string(dim_prev) + " of " + std::to_string(factor.multiplicity));
        for (std::size_t s = 1; s < deltas.size(); ++s)
            if (deltas[s] > deltas[s - 1])
                raise(Errc::internal, "Weyr deltas must be non-increasing");

        // deltas[s-1] blocks have size >= s; convert to the block multiset.
        EigenvalueStructure entry;
        entry.eigenvalue = factor.eigenvalue;
        entry.weyr_deltas = deltas;
        for (std::size_t s = deltas.size(); s-- > 0;) {
            const std::size_t ge_here = deltas[s];
            const std::size_t ge_next = s + 1 < deltas.size() ? deltas[s + 1] : 0;
            for (std::size_t k = 0; k < ge_here - ge_next; ++k) entry.block_sizes.push_back(s + 1);
        }
        std::sort(entry.block_sizes.rbegin(), entry.block_sizes.rend());
        structure.entries.push_back(std::move(entry));
    }
    return structure;
}

JordanStructure structure_of_jordan_matrix(const Matrix& j) {
    JordanStructure structure;
    auto entry_for = [&structure](const Rational& lambda) -> EigenvalueStructure& {
        for (auto& e : structure.entries)
            if (e.eigenvalue == lambda) return e;
        structure.entries.push_back(EigenvalueStructure{lambda, {}, {}});
        return structure.entries.back();
    };

    const std::size_t n = j.rows();
    std::size_t start = 0;
    while (start < n) {
        std::size_t end = start;
        while (end + 1 < n && j(end, end + 1) == Rational(1) && j(end + 1, end + 1) == j(end, end))
            ++end;
        entry_for(j(start, start)).block_sizes.push_back(end - start + 1);
        start = end + 1;
    }
    for (auto& e : structure.entries) {
        std::sort(e.block_sizes.rbegin(), e.block_sizes.rend());
        // Rebuild the Weyr view from the block multiset.
        const std::size_t largest = e.block_sizes.front();
        e.weyr_deltas.assign(largest, 0);
        for (std::size_t size : e.block_sizes)
            for (std::size_t s = 0; s < size; ++s) ++e.weyr_deltas[s];
    }
    return structure;
}

bool structures_equal(const JordanStructure& a, const JordanStructure& b) {
    if (a.entries.size() != b.entries.size()) return false;
    for (const auto& ea : a.entries) {
        const EigenvalueStructure* eb = b.find(ea.eigenvalue);
        if (!eb) return false;
        std::vector<std::size_t> sa = ea.block_sizes, sb = eb->block_sizes;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    return true;
}

VerifyReport verify_decomposition(const Matrix& a, const Matrix& p, const Matrix& j) {
    VerifyReport report;
    std::ostringstream detail;

    if (!a.is_square() || a.rows() != p.rows() || !p.is_square() || !j.is_square() ||
        j.rows() != a.rows()) {
        report.detail = "dimension mismatch between A, P, J";
        return report;
    }
    const std::size_t n = a.rows();

    report.jordan_form = true;
    for (std::size_t i = 0; i < n && report.jordan_form; ++i)
        for (std::size_t k = 0; k < n && report.jordan_form; ++k) {
            if (i == k) continue;
            if (k == i + 1) {
                if (j(i, k).is_zero()) continue;
                if (j(i, k) != Rational(1)) {
                    report.jordan_form = false;
                    detail << "superdiagonal entry at (" << i << "," << k << ") is not 0 or 1; ";
                } else if (j(i, i) != j(k, k)) {
                    report.jordan_form = false;
                    detail << "superdiagonal 1 bridges distinct eigenvalues at (" << i << "," << k
                           << "); ";
                }
            } else if (!j(i, k).is_zero()) {
                report.jordan_form = false;
                detail << "nonzero off-block entry at (" << i << "," << k << "); ";
            }
        }

    report.similarity = mat_mul(a, p) == mat_mul(p, j);
    if (!report.similarity) detail << "A*P != P*J; ";

    report.invertible = rank(p) == n;
    if (!report.invertible) detail << "P is singular; ";

    report.detail = detail.str();
    return report;
}

} // namespace jcf
