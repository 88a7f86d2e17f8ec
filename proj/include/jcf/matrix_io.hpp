#ifndef JCF_MATRIX_IO_HPP
#define JCF_MATRIX_IO_HPP

#include <string>
#include <string_view>

#include "jcf/charpoly.hpp"
#include "jcf/matrix.hpp"

namespace jcf {

/// Matrix text format: first nonblank line holds n, then n lines of n
/// whitespace-separated scalars in "p" or "p/q" form. '#' starts a comment
/// to end of line. Parse failures carry line/column positions.
Matrix parse_matrix(std::string_view text);

std::string render_matrix(const Matrix& m);

Matrix load_matrix_file(const std::string& path);

/// Spectrum flag grammar: comma-separated "value:multiplicity" pairs, value
/// in p or p/q form, e.g. "2:4,3:6".
Spectrum parse_spectrum(std::string_view text);

/// FNV-1a 64-bit digest of the canonical matrix rendering.
std::string matrix_digest(const Matrix& m);

} // namespace jcf

#endif
