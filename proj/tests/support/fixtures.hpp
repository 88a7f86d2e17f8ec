#ifndef JCF_TESTS_FIXTURES_HPP
#define JCF_TESTS_FIXTURES_HPP

#include <string>

#include "jcf/matrix.hpp"
#include "jcf/matrix_io.hpp"

namespace support {

// 10x10 integer matrix with characteristic polynomial (x-2)^4 (x-3)^6 and
// block structure 3:{4,2}, 2:{3,1}; the golden end-to-end fixture.
inline const jcf::Matrix& golden10() {
    static const jcf::Matrix m = jcf::parse_matrix(R"(10
1679 5708 -545 1814 948 -1644 6250 -672 5777 -4718
-384 -1320 99 -450 -217 376 -1337 131 -1274 1030
224 1301 692 1211 -136 -227 -2023 550 -1153 710
-152 -530 16 -211 -103 145 -451 28 -501 355
-105 -197 238 136 -170 94 -1170 206 -971 635
-101 -73 365 292 -267 85 -1652 304 -1386 821
-55 -20 245 225 -127 49 -1060 210 -802 547
35 122 -2 52 27 -34 98 -2 113 -73
10 -74 -141 -158 81 -4 563 -115 446 -258
-5 -76 -75 -100 36 8 273 -60 205 -113
)");
    return m;
}

inline jcf::Matrix parse(const std::string& text) { return jcf::parse_matrix(text); }

inline jcf::Vector vec(std::initializer_list<long long> entries) {
    jcf::Vector v(entries.size());
    std::size_t i = 0;
    for (long long e : entries) v[i++] = jcf::Rational(e);
    return v;
}

inline jcf::Vector ones(std::size_t n) {
    jcf::Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = jcf::Rational(1);
    return v;
}

} // namespace support

#endif
