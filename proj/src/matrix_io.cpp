#include "jcf/matrix_io.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <vector>

namespace jcf {

namespace {

struct Token {
    std::string text;
    std::size_t line;
    std::size_t col;
};

// One logical line worth of tokens, comments stripped.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
    std::vector<std::vector<Token>> lines;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        ++line_no;

        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);

        std::vector<Token> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i >= line.size()) break;
            const std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            tokens.push_back(Token{std::string(line.substr(start, i - start)), line_no, start + 1});
        }
        if (!tokens.empty()) lines.push_back(std::move(tokens));

        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return lines;
}

[[noreturn]] void parse_fail(const Token& tok, const std::string& what) {
    raise(Errc::parse_error, "line " + std::to_string(tok.line) + ", col " +
                                 std::to_string(tok.col) + ": " + what + " '" + tok.text + "'");
}

} // namespace

Matrix parse_matrix(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty()) raise(Errc::parse_error, "empty matrix file");

    const auto& header = lines[0];
    if (header.size() != 1) parse_fail(header[1], "expected nothing after the dimension");
    std::size_t n = 0;
    try {
        std::size_t consumed = 0;
        n = std::stoul(header[0].text, &consumed);
        if (consumed != header[0].text.size() || n == 0) throw std::invalid_argument("");
    } catch (const std::exception&) {
        parse_fail(header[0], "expected a positive matrix dimension");
    }

    if (lines.size() - 1 < n)
        raise(Errc::dimension_error, "expected " + std::to_string(n) + " rows, found " +
                                         std::to_string(lines.size() - 1));
    if (lines.size() - 1 > n)
        raise(Errc::dimension_error,
              "unexpected content on line " + std::to_string(lines[n + 1][0].line));

    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = lines[i + 1];
        if (row.size() != n)
            raise(Errc::dimension_error, "line " + std::to_string(row[0].line) + ": expected " +
                                             std::to_string(n) + " entries, found " +
                                             std::to_string(row.size()));
        for (std::size_t j = 0; j < n; ++j) {
            try {
                m(i, j) = Rational::parse(row[j].text);
            } catch (const Error&) {
                parse_fail(row[j], "bad scalar");
            }
        }
    }
    return m;
}

std::string render_matrix(const Matrix& m) {
    std::ostringstream os;
    os << m.rows() << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << " ";
            os << m(i, j);
        }
        os << "\n";
    }
    return os.str();
}

Matrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::parse_error, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_matrix(buffer.str());
}

Spectrum parse_spectrum(std::string_view text) {
    Spectrum spectrum;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view part =
            text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        const std::size_t colon = part.find(':');
        if (colon == std::string_view::npos)
            raise(Errc::parse_error, "spectrum entry '" + std::string(part) +
                                         "' is not value:multiplicity");
        const Rational value = Rational::parse(part.substr(0, colon));
        std::size_t mult = 0;
        try {
            std::size_t consumed = 0;
            mult = std::stoul(std::string(part.substr(colon + 1)), &consumed);
            if (consumed != part.size() - colon - 1 || mult == 0) throw std::invalid_argument("");
        } catch (const std::exception&) {
            raise(Errc::parse_error, "bad multiplicity in '" + std::string(part) + "'");
        }
        if (spectrum.index_of(value))
            raise(Errc::parse_error, "repeated eigenvalue " + value.str() + " in spectrum");
        spectrum.factors.push_back(SpectrumFactor{value, mult});
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (spectrum.factors.empty()) raise(Errc::parse_error, "empty spectrum");
    return spectrum;
}

std::string matrix_digest(const Matrix& m) {
    const std::string text = render_matrix(m);
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    std::ostringstream os;
    os << std::hex << hash;
    return os.str();
}

} // namespace jcf
