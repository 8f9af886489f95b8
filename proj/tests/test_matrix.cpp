#include <gtest/gtest.h>

#include <random>

#include "qrook/matrix.hpp"

using namespace qrook;

namespace {

Matrix<Rational> random_matrix(std::mt19937& rng, std::size_t n, int density = 3) {
    std::uniform_int_distribution<int> v(-3, 3), keep(0, density);
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (keep(rng) == 0) m(i, j) = v(rng);
    return m;
}

}  // namespace

TEST(Matrix, ParallelMultiplyMatchesSerial) {
    std::mt19937 rng(11);
    for (std::size_t n : {1u, 5u, 16u, 33u}) {
        auto a = random_matrix(rng, n), b = random_matrix(rng, n);
        EXPECT_EQ(multiply(a, b), multiply_serial(a, b));
    }
}

TEST(Matrix, RatFuncMultiply) {
    Matrix<RatFunc> a(2, 2);
    a(0, 0) = RatFunc::q();
    a(0, 1) = 1;
    a(1, 1) = RatFunc::q_power(-1);
    auto sq = a * a;
    EXPECT_EQ(sq(0, 0), RatFunc::q_power(2));
    EXPECT_EQ(sq(0, 1), RatFunc::q() + RatFunc::q_power(-1));
    EXPECT_EQ(sq(1, 1), RatFunc::q_power(-2));
    EXPECT_TRUE(sq(1, 0).is_zero());
}

TEST(Matrix, KroneckerShapeAndEntries) {
    Matrix<Rational> a(2, 2), b = Matrix<Rational>::identity(3);
    a(0, 1) = 2;
    a(1, 0) = -1;
    auto k = kronecker(a, b);
    ASSERT_EQ(k.rows(), 6u);
    EXPECT_EQ(k(0, 3), Rational(2));
    EXPECT_EQ(k(4, 1), Rational(-1));
    EXPECT_EQ(k.nonzeros(), 6u);
}

TEST(Matrix, InverseAndRank) {
    Matrix<Rational> m(3, 3);
    m(0, 0) = 2;
    m(0, 2) = 1;
    m(1, 1) = 3;
    m(2, 0) = 1;
    m(2, 2) = 1;
    auto inv = inverse(m);
    EXPECT_EQ(m * inv, Matrix<Rational>::identity(3));
    EXPECT_EQ(rank(m), 3u);

    Matrix<Rational> s(2, 2);
    s(0, 0) = 1;
    s(0, 1) = 2;
    s(1, 0) = 2;
    s(1, 1) = 4;
    EXPECT_EQ(rank(s), 1u);
    EXPECT_THROW(inverse(s), NotInvertible);
}

TEST(Matrix, SpecializeAndLift) {
    Matrix<RatFunc> m(1, 2);
    m(0, 0) = parse_ratfunc("q^2-1");
    m(0, 1) = parse_ratfunc("1/q");
    auto s = specialize(m, Rational(2));
    EXPECT_EQ(s(0, 0), Rational(3));
    EXPECT_EQ(s(0, 1), Rational(1, 2));
    EXPECT_EQ(lift(s)(0, 1), RatFunc(Rational(1, 2)));
}

TEST(Matrix, SizeMismatchThrows) {
    Matrix<Rational> a(2, 2), b(3, 3);
    EXPECT_THROW(a + b, InvalidArgument);
    EXPECT_THROW(multiply(a, b), InvalidArgument);
}

TEST(MatrixProperty, MultiplicationIsAssociative) {
    std::mt19937 rng(3);
    for (int t = 0; t < 20; ++t) {
        auto a = random_matrix(rng, 6, 1), b = random_matrix(rng, 6, 1), c = random_matrix(rng, 6, 1);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(kronecker(a, b) * kronecker(c, a), kronecker(a * c, b * a));
    }
}
