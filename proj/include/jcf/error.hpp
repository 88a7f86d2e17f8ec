#ifndef JCF_ERROR_HPP
#define JCF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace jcf {

/// Stable error classes; the CLI maps each to a distinct exit code.
enum class Errc {
    dimension_mismatch,
    division_by_zero,
    parse_error,
    dimension_error,
    not_factorable_over_rationals,
    zero_projection,
    cap_exceeded,
    seed_exhaustion,
    singular_matrix,
    exhausted_eigenvalue,
    inconsistent_spectrum,
    incomplete_basis,
    internal,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace jcf

#endif
