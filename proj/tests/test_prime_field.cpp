#include <random>

#include <gtest/gtest.h>

#include "symmod/prime_field.hpp"

using namespace symmod;

namespace {

PrimeFieldMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint32_t p, std::mt19937& rng) {
    PrimeFieldMatrix m(rows, cols, p);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rng() % p;
    return m;
}

PrimeFieldMatrix naive_product(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b) {
    PrimeFieldMatrix c(a.rows(), b.cols(), a.modulus());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            std::uint64_t s = 0;
            for (std::size_t k = 0; k < a.cols(); ++k)
                s = (s + std::uint64_t(a(i, k)) * b(k, j)) % a.modulus();
            c(i, j) = static_cast<std::uint32_t>(s);
        }
    return c;
}

} // namespace

TEST(PrimeField, ProductMatchesNaive) {
    std::mt19937 rng(3);
    for (std::uint32_t p : {2u, 3u, 7u, 65521u, 2147483647u}) {
        auto a = random_matrix(17, 40, p, rng);
        auto b = random_matrix(40, 9, p, rng);
        EXPECT_EQ(a * b, naive_product(a, b)) << p;
    }
}

TEST(PrimeField, RankOfSmallMatrices) {
    auto g = PrimeFieldMatrix::from_integers({{2, 1}, {1, 2}}, 3);
    EXPECT_EQ(g.rank(), 1u);
    g = PrimeFieldMatrix::from_integers({{2, 1}, {1, 2}}, 2);
    EXPECT_EQ(g.rank(), 2u);
    g = PrimeFieldMatrix::from_integers({{2, 1}, {1, 2}}, 5);
    EXPECT_EQ(g.rank(), 2u);
    EXPECT_EQ(PrimeFieldMatrix(3, 4, 5).rank(), 0u);
    EXPECT_EQ(PrimeFieldMatrix::from_integers({{-1, 4}}, 5)(0, 0), 4u);
}

TEST(PrimeField, RankFromConstructedFactors) {
    std::mt19937 rng(11);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u})
        for (std::size_t k : {0u, 1u, 5u, 12u}) {
            // A = B C with B (20 x k), C (k x 25) of full rank k has rank k.
            PrimeFieldMatrix b, c;
            do {
                b = random_matrix(20, k, p, rng);
                c = random_matrix(k, 25, p, rng);
            } while (b.rank() != k || c.rank() != k);
            EXPECT_EQ((b * c).rank(), k);
        }
}

TEST(PrimeField, NullspaceAnnihilates) {
    std::mt19937 rng(5);
    for (std::uint32_t p : {2u, 3u, 13u}) {
        auto a = random_matrix(6, 14, p, rng);
        auto ker = a.nullspace();
        EXPECT_EQ(ker.cols() + a.rank(), 14u);
        EXPECT_EQ(a * ker, PrimeFieldMatrix(6, ker.cols(), p));
        EXPECT_EQ(ker.rank(), ker.cols());
    }
}

TEST(PrimeField, Inverse) {
    std::mt19937 rng(9);
    for (std::uint32_t p : {2u, 5u, 31u}) {
        PrimeFieldMatrix a;
        do
            a = random_matrix(15, 15, p, rng);
        while (a.rank() != 15);
        auto inv = a.inverted();
        ASSERT_TRUE(inv);
        EXPECT_EQ(a * *inv, PrimeFieldMatrix::identity(15, p));
        EXPECT_EQ(*inv * a, PrimeFieldMatrix::identity(15, p));
    }
    EXPECT_FALSE(PrimeFieldMatrix::from_integers({{1, 2}, {2, 4}}, 7).inverted());
}

TEST(PrimeField, RowReduceIsReducedEchelon) {
    std::mt19937 rng(1);
    auto a = random_matrix(30, 30, 3, rng);
    auto r = a;
    auto pivots = r.row_reduce();
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        for (std::size_t i = 0; i < r.rows(); ++i)
            EXPECT_EQ(r(i, pivots[k]), i == k ? 1u : 0u);
        for (std::size_t j = 0; j < pivots[k]; ++j)
            EXPECT_EQ(r(k, j), 0u);
    }
    for (std::size_t i = pivots.size(); i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j)
            EXPECT_EQ(r(i, j), 0u);
}

TEST(PrimeField, TraceTransposeArithmetic) {
    auto a = PrimeFieldMatrix::from_integers({{1, 2}, {3, 4}}, 5);
    EXPECT_EQ(a.trace(), 0u);
    EXPECT_EQ(a.transpose()(0, 1), 3u);
    EXPECT_EQ((a + a)(1, 1), 3u);
    EXPECT_EQ((a - a), PrimeFieldMatrix(2, 2, 5));
    EXPECT_EQ(a.scaled(-1)(0, 0), 4u);
}
