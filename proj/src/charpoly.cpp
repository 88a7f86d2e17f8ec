#include "jcf/charpoly.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace jcf {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty() || coeffs_.back() != Rational(1))
        raise(Errc::internal, "polynomial must be monic");
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
}

Polynomial Polynomial::deflate(const Rational& root) const {
    if (degree() == 0) raise(Errc::internal, "deflating a constant polynomial");
    std::vector<Rational> q(degree());
    Rational carry = coeffs_.back();
    for (std::size_t k = degree(); k-- > 0;) {
        q[k] = carry;
        carry = coeffs_[k] + root * carry;
    }
    if (!carry.is_zero()) raise(Errc::internal, "deflate called with a non-root");
    return Polynomial(std::move(q));
}

std::string Polynomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k].is_zero() && coeffs_.size() > 1) continue;
        if (!first) os << " + ";
        os << "(" << coeffs_[k] << ")";
        if (k > 0) os << "x^" << k;
        first = false;
    }
    return os.str();
}

std::size_t Spectrum::total_multiplicity() const {
    std::size_t total = 0;
    for (const auto& f : factors) total += f.multiplicity;
    return total;
}

std::optional<std::size_t> Spectrum::index_of(const Rational& lambda) const {
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (factors[i].eigenvalue == lambda) return i;
    return std::nullopt;
}

Polynomial Spectrum::expand() const {
    std::vector<Rational> coeffs{Rational(1)};
    for (const auto& f : factors) {
        for (std::size_t rep = 0; rep < f.multiplicity; ++rep) {
            // multiply by (x - lambda)
            std::vector<Rational> next(coeffs.size() + 1);
            for (std::size_t k = 0; k < coeffs.size(); ++k) {
                next[k + 1] += coeffs[k];
                next[k] -= f.eigenvalue * coeffs[k];
            }
            coeffs = std::move(next);
        }
    }
    return Polynomial(std::move(coeffs));
}

Polynomial characteristic_polynomial(const Matrix& a) {
    if (!a.is_square()) raise(Errc::dimension_mismatch, "characteristic_polynomial");
    const std::size_t n = a.rows();
    if (n == 0) return Polynomial();

    // Values of det(xI - A) at x = 0..n.
    std::vector<Rational> values(n + 1);
    for (std::size_t t = 0; t <= n; ++t) {
        const Rational node(static_cast<long long>(t));
        Matrix m = a;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = (i == j ? node - a(i, j) : -a(i, j));
        values[t] = determinant(m);
    }

    // Newton's divided differences on the integer nodes, then expansion to
    // monomial coefficients.
    std::vector<Rational> dd = values;
    for (std::size_t level = 1; level <= n; ++level)
        for (std::size_t i = n; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long long>(level));

    std::vector<Rational> coeffs{dd[n]};
    for (std::size_t k = n; k-- > 0;) {
        // coeffs := coeffs*(x - k) + dd[k]
        std::vector<Rational> next(coeffs.size() + 1);
        const Rational node(static_cast<long long>(k));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] += coeffs[i];
            next[i] -= node * coeffs[i];
        }
        next[0] += dd[k];
        coeffs = std::move(next);
    }

    if (coeffs.size() != n + 1 || coeffs.back() != Rational(1))
        raise(Errc::internal, "characteristic polynomial is not monic of degree n");
    return Polynomial(std::move(coeffs));
}

namespace {

// Prime factorization by trial division. Cofactors surviving the bound are
// split as perfect powers where possible and otherwise kept as one unit, so
// very large coprime candidates beyond the bound can be missed; at this
// tool's scale (modest rational eigenvalues) that case does not arise.
std::map<mpz_class, unsigned> factorize(mpz_class z) {
    std::map<mpz_class, unsigned> factors;
    if (z < 0) z = -z;
    if (z <= 1) return factors;

    const unsigned long bound = 1u << 20;
    for (unsigned long p = 2; p <= bound && mpz_class(p) * p <= z; p = (p == 2 ? 3 : p + 2)) {
        while (mpz_divisible_ui_p(z.get_mpz_t(), p)) {
            ++factors[mpz_class(p)];
            mpz_divexact_ui(z.get_mpz_t(), z.get_mpz_t(), p);
        }
    }
    if (z > 1) {
        if (mpz_perfect_power_p(z.get_mpz_t())) {
            for (unsigned long e = 2;; ++e) {
                mpz_class root;
                if (mpz_root(root.get_mpz_t(), z.get_mpz_t(), e)) {
                    if (!mpz_perfect_power_p(root.get_mpz_t())) {
                        factors[root] += static_cast<unsigned>(e);
                        break;
                    }
                } else if (mpz_sizeinbase(z.get_mpz_t(), 2) < e) {
                    factors[z] += 1;
                    break;
                }
            }
        } else {
            factors[z] += 1;
        }
    }
    return factors;
}

std::vector<mpz_class> divisors(const mpz_class& z) {
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : factorize(z)) {
        const std::size_t base = divs.size();
        mpz_class power = 1;
        for (unsigned k = 1; k <= e; ++k) {
            power *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * power);
        }
    }
    return divs;
}

// All rational-root-theorem candidates for the integer-scaled polynomial,
// smallest magnitude first, positive before negative.
std::vector<Rational> root_candidates(const Polynomial& p) {
    mpz_class lead_lcm = 1;
    for (const auto& c : p.coeffs())
        mpz_lcm(lead_lcm.get_mpz_t(), lead_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    // Scaled constant term: coeff[0]*L is an integer.
    mpq_class scaled = p.coeff(0).raw() * lead_lcm;
    mpz_class constant = scaled.get_num();

    std::set<Rational> unique;
    for (const auto& num : divisors(constant))
        for (const auto& den : divisors(lead_lcm)) {
            mpq_class q(num, den);
            q.canonicalize();
            unique.insert(Rational(q));
            unique.insert(Rational(mpq_class(-q)));
        }

    std::vector<Rational> out(unique.begin(), unique.end());
    std::sort(out.begin(), out.end(), [](const Rational& a, const Rational& b) {
        const Rational aa = a < Rational(0) ? -a : a;
        const Rational bb = b < Rational(0) ? -b : b;
        if (aa != bb) return aa < bb;
        return b < a; // positive first
    });
    return out;
}

} // namespace

Spectrum factor_spectrum(const Polynomial& p) {
    Spectrum spectrum;
    Polynomial rest = p;

    auto record = [&spectrum](const Rational& root, std::size_t mult) {
        spectrum.factors.push_back(SpectrumFactor{root, mult});
    };

    while (rest.degree() > 0) {
        // Root at zero: strip directly.
        if (rest.coeff(0).is_zero()) {
            std::size_t mult = 0;
            while (rest.degree() > 0 && rest.coeff(0).is_zero()) {
                rest = rest.deflate(Rational(0));
                ++mult;
            }
            record(Rational(0), mult);
            continue;
        }
        if (rest.degree() == 1) {
            record(-rest.coeff(0), 1);
            break;
        }

        bool found = false;
        for (const Rational& candidate : root_candidates(rest)) {
            if (!rest.eval(candidate).is_zero()) continue;
            std::size_t mult = 0;
            while (rest.degree() > 0 && rest.eval(candidate).is_zero()) {
                rest = rest.deflate(candidate);
                ++mult;
            }
            record(candidate, mult);
            found = true;
            break;
        }
        if (!found)
            raise(Errc::not_factorable_over_rationals,
                  "irreducible factor of degree " + std::to_string(rest.degree()) +
                      " has no rational root");
    }
    return spectrum;
}

} // namespace jcf
