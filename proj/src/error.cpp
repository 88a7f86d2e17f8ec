#include "jcf/error.hpp"

namespace jcf {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::dimension_mismatch: return "DimensionMismatch";
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::parse_error: return "ParseError";
        case Errc::dimension_error: return "DimensionError";
        case Errc::not_factorable_over_rationals: return "NotFullyFactorableOverRationals";
        case Errc::zero_projection: return "ZeroProjection";
        case Errc::cap_exceeded: return "CapExceeded";
        case Errc::seed_exhaustion: return "SeedExhaustion";
        case Errc::singular_matrix: return "SingularMatrix";
        case Errc::exhausted_eigenvalue: return "ExhaustedEigenvalue";
        case Errc::inconsistent_spectrum: return "InconsistentSpectrum";
        case Errc::incomplete_basis: return "IncompleteBasis";
        case Errc::internal: return "InternalError";
    }
    return "UnknownError";
}

} // namespace jcf
