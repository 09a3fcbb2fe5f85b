#include "doctest.h"

#include "ldmds/field.hpp"
#include "ldmds/matrix.hpp"
#include "ldmds/rng.hpp"

#include "oracles.hpp"

using namespace ldmds;

TEST_CASE("primality and prime search") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(7));
    CHECK(is_prime(2147483647ull));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(9));
    CHECK_FALSE(is_prime(2147483647ull * 2));
    CHECK(smallest_prime_geq(8) == 11);
    CHECK(smallest_prime_geq(7) == 7);
    CHECK(smallest_prime_geq(0) == 2);
    CHECK(smallest_prime_geq(14) == 17);
}

TEST_CASE("field construction rejects non-primes and oversized moduli") {
    CHECK_THROWS_AS(PrimeField(0), InvalidParamsError);
    CHECK_THROWS_AS(PrimeField(1), InvalidParamsError);
    CHECK_THROWS_AS(PrimeField(4), InvalidParamsError);
    CHECK_THROWS_AS(PrimeField(9), InvalidParamsError);
    CHECK_THROWS_AS(PrimeField(1u << 31), InvalidParamsError);
    CHECK(PrimeField(2).order() == 2);
    CHECK(PrimeField(2147483647u).order() == 2147483647u);
}

TEST_CASE("arithmetic in GF(7)") {
    PrimeField f(7);
    CHECK(f.add(3, 5) == 1);
    CHECK(f.sub(3, 5) == 5);
    CHECK(f.mul(3, 5) == 1);
    CHECK(f.neg(3) == 4);
    CHECK(f.neg(0) == 0);
    CHECK(f.inv(3) == 5);
    CHECK(f.inv(1) == 1);
    CHECK(f.pow(3, 0) == 1);
    CHECK(f.pow(3, 6) == 1);
    CHECK_THROWS_AS(f.inv(0), DivisionByZeroError);
}

TEST_CASE("arithmetic in GF(2) and GF(3)") {
    PrimeField f2(2);
    CHECK(f2.add(1, 1) == 0);
    CHECK(f2.mul(1, 1) == 1);
    CHECK(f2.inv(1) == 1);
    PrimeField f3(3);
    CHECK(f3.inv(2) == 2);
    CHECK(f3.sub(0, 2) == 1);
}

TEST_CASE("element operators carry the modulus and reject mixed fields") {
    PrimeField f7(7);
    PrimeField f5(5);
    FieldElement a = f7.element(3);
    FieldElement b = f7.element(5);
    CHECK((a + b).value() == 1);
    CHECK((a - b).value() == 5);
    CHECK((a * b).value() == 1);
    CHECK((a / b).value() == 2); // 3 * inv(5) = 3 * 3 = 2
    CHECK((-a).value() == 4);
    CHECK(a.inv().value() == 5);
    CHECK_THROWS_AS(a + f5.element(1), FieldMismatchError);
    CHECK_THROWS_AS(a == f5.element(3), FieldMismatchError);
    CHECK_THROWS_AS(f7.element(7), InvalidParamsError);
    CHECK_THROWS_AS(a / f7.element(0), DivisionByZeroError);
    CHECK(f7.from_int(-1).value() == 6);
    CHECK(f7.from_int(15).value() == 1);
}

TEST_CASE("inverse round-trips across field sizes") {
    for (std::uint32_t q : {2u, 3u, 7u, 31u, 65537u, 2147483647u}) {
        PrimeField f(q);
        DetRng rng(q);
        for (int t = 0; t < 50; ++t) {
            std::uint32_t a = 1 + rng.below(q - 1);
            CHECK(f.mul(a, f.inv(a)) == 1);
        }
    }
}

TEST_CASE("products near the modulus bound stay exact") {
    PrimeField f(2147483647u);
    std::uint32_t big = 2147483646u;
    // (q-1)^2 mod q == 1
    CHECK(f.mul(big, big) == 1);
}

TEST_CASE("matrix construction and access") {
    PrimeField f(7);
    Matrix z(f, 2, 3);
    CHECK(z.rows() == 2);
    CHECK(z.cols() == 3);
    CHECK(z.raw(1, 2) == 0);
    Matrix i3 = Matrix::identity(f, 3);
    CHECK(i3.raw(0, 0) == 1);
    CHECK(i3.raw(0, 1) == 0);
    Matrix m = Matrix::from_rows(f, {{1, 2}, {3, 4}});
    CHECK(m.at(1, 0).value() == 3);
    CHECK(m.row(1) == std::vector<std::uint32_t>{3, 4});
    CHECK(m.col(1) == std::vector<std::uint32_t>{2, 4});
    CHECK_THROWS_AS(Matrix::from_rows(f, {{1, 2}, {3}}), DimensionError);
    CHECK_THROWS_AS(Matrix::from_rows(f, {{1, 9}}), InvalidParamsError);
}

TEST_CASE("matrix multiply basics") {
    PrimeField f(7);
    Matrix m = Matrix::from_rows(f, {{1, 2}, {3, 4}, {5, 6}});
    Matrix i2 = Matrix::identity(f, 2);
    CHECK(mat_mul(m, i2) == m);
    Matrix z(f, 2, 3);
    CHECK(mat_mul(z, m) == Matrix(f, 2, 2));
    CHECK_THROWS_AS(mat_mul(m, m), DimensionError);
    Matrix other_field = Matrix::identity(PrimeField(5), 2);
    CHECK_THROWS_AS(mat_mul(m, other_field), FieldMismatchError);
    // [[1,2],[3,4]] * [[5,6],[0,1]] over GF(7) = [[5,1],[1,1]]
    Matrix a = Matrix::from_rows(f, {{1, 2}, {3, 4}});
    Matrix b = Matrix::from_rows(f, {{5, 6}, {0, 1}});
    CHECK(mat_mul(a, b) == Matrix::from_rows(f, {{5, 1}, {1, 1}}));
}

TEST_CASE("matrix inverse on known values") {
    PrimeField f3(3);
    Matrix m = Matrix::from_rows(f3, {{1, 1}, {1, 2}});
    CHECK(mat_inv(m) == Matrix::from_rows(f3, {{2, 2}, {2, 1}}));
    CHECK(mat_inv(Matrix::identity(f3, 4)) == Matrix::identity(f3, 4));
    CHECK_THROWS_AS(mat_inv(Matrix::from_rows(f3, {{1, 1}, {2, 2}})),
                    SingularMatrixError);
    CHECK_THROWS_AS(mat_inv(Matrix(f3, 2, 3)), DimensionError);
}

TEST_CASE("inverse times original is the identity") {
    DetRng rng(42);
    for (std::uint32_t q : {2u, 3u, 7u, 101u}) {
        PrimeField f(q);
        for (std::size_t n = 1; n <= 8; n += 3) {
            // Rejection-sample a nonsingular matrix.
            for (int attempt = 0; attempt < 200; ++attempt) {
                Matrix m(f, n, n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) m.set(i, j, rng.below(q));
                try {
                    Matrix inv = mat_inv(m);
                    CHECK(mat_mul(inv, m) == Matrix::identity(f, n));
                    CHECK(mat_mul(m, inv) == Matrix::identity(f, n));
                    break;
                } catch (const SingularMatrixError&) {
                    continue;
                }
            }
        }
    }
}

TEST_CASE("rank matches the brute-force minor oracle") {
    DetRng rng(7);
    for (std::uint32_t q : {2u, 3u, 5u}) {
        PrimeField f(q);
        for (int t = 0; t < 30; ++t) {
            std::size_t nr = 1 + rng.below(4);
            std::size_t nc = 1 + rng.below(4);
            Matrix m(f, nr, nc);
            for (std::size_t i = 0; i < nr; ++i)
                for (std::size_t j = 0; j < nc; ++j) m.set(i, j, rng.below(q));
            CHECK(rank(m) == oracles::brute_minor_rank(m));
        }
    }
    PrimeField f7(7);
    CHECK(rank(Matrix::identity(f7, 5)) == 5);
    CHECK(rank(Matrix(f7, 3, 4)) == 0);
}

TEST_CASE("transpose, negate, add, subtract") {
    PrimeField f(5);
    Matrix m = Matrix::from_rows(f, {{1, 2, 3}, {4, 0, 1}});
    CHECK(transpose(m) == Matrix::from_rows(f, {{1, 4}, {2, 0}, {3, 1}}));
    CHECK(negate(m) == Matrix::from_rows(f, {{4, 3, 2}, {1, 0, 4}}));
    CHECK(mat_add(m, negate(m)) == Matrix(f, 2, 3));
    CHECK(mat_sub(m, m) == Matrix(f, 2, 3));
    CHECK(transpose(transpose(m)) == m);
}

TEST_CASE("kronecker product structure") {
    PrimeField f(7);
    Matrix a = Matrix::from_rows(f, {{1, 2}, {3, 4}});
    Matrix b = Matrix::from_rows(f, {{0, 1}, {1, 0}});
    Matrix k = kronecker(a, b);
    REQUIRE(k.rows() == 4);
    REQUIRE(k.cols() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(k.raw(i, j) == f.mul(a.raw(i / 2, j / 2), b.raw(i % 2, j % 2)));
    Matrix single = Matrix::from_rows(f, {{1}});
    CHECK(kronecker(single, b) == b);
}

TEST_CASE("submatrix and row-vector product") {
    PrimeField f(7);
    Matrix m = Matrix::from_rows(f, {{1, 2, 3}, {4, 5, 6}, {0, 1, 0}});
    CHECK(submatrix(m, {0, 2}, {1}) == Matrix::from_rows(f, {{2}, {1}}));
    CHECK_THROWS_AS(submatrix(m, {3}, {0}), DimensionError);
    std::vector<std::uint32_t> v{1, 1, 1};
    CHECK(row_vec_mul(v, m) == std::vector<std::uint32_t>{5, 1, 2});
    std::vector<std::uint32_t> bad{1, 1};
    CHECK_THROWS_AS(row_vec_mul(bad, m), DimensionError);
}

TEST_CASE("determinant oracle agrees with elimination on invertibility") {
    DetRng rng(11);
    PrimeField f(5);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + rng.below(4);
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.set(i, j, rng.below(5));
        bool invertible = oracles::brute_determinant(m) != 0;
        CHECK(invertible == (rank(m) == n));
    }
}
