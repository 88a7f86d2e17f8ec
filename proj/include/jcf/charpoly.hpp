#ifndef JCF_CHARPOLY_HPP
#define JCF_CHARPOLY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jcf/matrix.hpp"
#include "jcf/rational.hpp"

namespace jcf {

/// Monic polynomial with rational coefficients, lowest degree first.
class Polynomial {
  public:
    Polynomial() : coeffs_{Rational(1)} {}
    explicit Polynomial(std::vector<Rational> coeffs);

    std::size_t degree() const { return coeffs_.size() - 1; }
    const Rational& coeff(std::size_t k) const { return coeffs_[k]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& x) const;

    /// Quotient after dividing by (x - root); the remainder must be zero.
    Polynomial deflate(const Rational& root) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string str() const;

  private:
    std::vector<Rational> coeffs_;
};

struct SpectrumFactor {
    Rational eigenvalue;
    std::size_t multiplicity = 0;
};

/// The factored characteristic polynomial: distinct eigenvalues with their
/// algebraic multiplicities, in order of first occurrence.
struct Spectrum {
    std::vector<SpectrumFactor> factors;

    std::size_t total_multiplicity() const;
    std::optional<std::size_t> index_of(const Rational& lambda) const;

    /// Linear factors re-expanded, for verification against a polynomial.
    Polynomial expand() const;
};

/// det(xI - A) as a monic degree-n polynomial, computed exactly by
/// evaluating a fraction-free determinant at x = 0..n and interpolating.
Polynomial characteristic_polynomial(const Matrix& a);

/// Complete factorization into rational linear factors. Candidate roots come
/// from the rational root theorem on the integer-scaled polynomial and
/// multiplicities from repeated synthetic division. Throws
/// Errc::not_factorable_over_rationals if an irreducible factor of degree
/// >= 2 remains, which is the signal that the matrix has irrational or
/// complex eigenvalues.
Spectrum factor_spectrum(const Polynomial& p);

} // namespace jcf

#endif
