#include <doctest.h>

#include <random>

#include "jcf/matrix.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"

using namespace jcf;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = Rational(static_cast<long>(rng() % 11) - 5);
    return m;
}

} // namespace

TEST_CASE("mat_vec basics") {
    const Matrix id = Matrix::identity(3);
    const Vector v = support::vec({1, 2, 3});
    CHECK(mat_vec(id, v) == v);

    const Matrix zero(2, 2);
    CHECK(mat_vec(zero, support::vec({5, 7})) == Vector(2));

    CHECK_THROWS_AS(mat_vec(id, Vector(2)), Error);
}

TEST_CASE("mat_vec against the golden matrix reads off a column") {
    const Matrix& a = support::golden10();
    const Vector e1 = Vector::unit(10, 0);
    CHECK(mat_vec(a, e1) ==
          support::vec({1679, -384, 224, -152, -105, -101, -55, 35, 10, -5}));
}

TEST_CASE("mat_vec tallies") {
    OpCounters tally;
    const Matrix id = Matrix::identity(2);
    mat_vec(id, Vector(2), &tally);
    mat_vec(id, Vector(2), &tally);
    CHECK(tally.mat_vec == 2);
    CHECK(tally.solves == 0);
    CHECK(tally.kernels == 0);
}

TEST_CASE("apply_shifted_power basics") {
    const Matrix& a = support::golden10();
    const Vector w = support::ones(10);
    CHECK(apply_shifted_power(a, Rational(5), 0, w) == w);

    const Matrix d = support::parse("2\n2 0\n0 3");
    CHECK(apply_shifted_power(d, Rational(2), 1, support::vec({1, 1})) == support::vec({0, 1}));
}

TEST_CASE("apply_shifted_power equals the explicit matrix power route") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + rng() % 4;
        const Matrix a = random_matrix(rng, n);
        const Rational lambda(static_cast<long>(rng() % 7) - 3);
        const std::size_t k = rng() % 4;
        Vector w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = Rational(static_cast<long>(rng() % 9) - 4);

        const Matrix power = support::matrix_power(shifted(a, lambda), k);
        CHECK(apply_shifted_power(a, lambda, k, w) == mat_vec(power, w));
    }
}

TEST_CASE("kernel_basis on canonical shapes") {
    CHECK(kernel_basis(Matrix::identity(4)).empty());

    const auto zero_kernel = kernel_basis(Matrix(3, 3));
    REQUIRE(zero_kernel.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(zero_kernel[i] == Vector::unit(3, i));

    const Matrix nilpotent = support::parse("2\n0 1\n0 0");
    const auto k = kernel_basis(nilpotent);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == Vector::unit(2, 0));
}

TEST_CASE("kernel vectors are exact kernel members and independent") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + rng() % 5;
        Matrix m = random_matrix(rng, n);
        // Force rank deficiency: make one row a combination of two others.
        if (n >= 2)
            for (std::size_t j = 0; j < n; ++j) m(0, j) = m(n - 1, j) + m(n / 2, j);

        const auto kernel = kernel_basis(m);
        CHECK(rank(m) + kernel.size() == n);
        for (const auto& v : kernel) CHECK(mat_vec(m, v).is_zero());
        if (!kernel.empty())
            CHECK(rank(Matrix::from_columns(kernel)) == kernel.size());
    }
}

TEST_CASE("rank on canonical shapes") {
    CHECK(rank(Matrix::identity(5)) == 5);
    CHECK(rank(Matrix(3, 3)) == 0);
    // dim ker(A - 3I) = 2 and dim ker(A - 2I) = 2: two blocks each.
    CHECK(rank(shifted(support::golden10(), Rational(3))) == 8);
    CHECK(rank(shifted(support::golden10(), Rational(2))) == 8);
}

TEST_CASE("independent_of") {
    const Vector e1 = Vector::unit(2, 0);
    const Vector e2 = Vector::unit(2, 1);
    CHECK(independent_of({e2}, {e1}));
    CHECK_FALSE(independent_of({vec_scale(Rational(2), e1)}, {e1}));

    const Vector sum = vec_add(e1, e2);
    const Vector diff = vec_add(e1, vec_scale(Rational(-1), e2));
    CHECK_FALSE(independent_of({sum}, {diff, e1}));
}

TEST_CASE("mat_mul basics") {
    std::mt19937_64 rng(5);
    const Matrix m = random_matrix(rng, 4);
    const Matrix id = Matrix::identity(4);
    CHECK(mat_mul(id, m) == m);
    CHECK(mat_mul(m, id) == m);

    // Permutation matrix sends e_k to e_{sigma(k)}.
    Matrix perm(3, 3);
    perm(1, 0) = Rational(1);
    perm(2, 1) = Rational(1);
    perm(0, 2) = Rational(1);
    CHECK(mat_vec(perm, Vector::unit(3, 0)) == Vector::unit(3, 1));
    CHECK(mat_vec(perm, Vector::unit(3, 2)) == Vector::unit(3, 0));
}

TEST_CASE("determinant") {
    CHECK(determinant(Matrix::identity(4)) == Rational(1));
    const Matrix m = support::parse("2\n1/2 1\n1 4");
    CHECK(determinant(m) == Rational(1));
    const Matrix singular = support::parse("2\n1 2\n2 4");
    CHECK(determinant(singular) == Rational(0));
}
