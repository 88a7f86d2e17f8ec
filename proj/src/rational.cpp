#include "jcf/rational.hpp"

#include <cctype>
#include <ostream>

namespace jcf {

namespace {

bool valid_integer_token(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_integer_token(text, true))
            raise(Errc::parse_error, "bad scalar '" + std::string(text) + "'");
        return Rational(mpq_class(mpz_class(std::string(text))));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    // The denominator must be a plain positive integer; signs live on p.
    if (!valid_integer_token(num, true) || !valid_integer_token(den, false))
        raise(Errc::parse_error, "bad scalar '" + std::string(text) + "'");
    mpz_class q{std::string(den)};
    if (q == 0) raise(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
    mpq_class v(mpz_class(std::string(num)), q);
    v.canonicalize();
    return Rational(v);
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace jcf
