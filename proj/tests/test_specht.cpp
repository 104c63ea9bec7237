#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "symmod/mullineux.hpp"
#include "symmod/specht.hpp"

using namespace symmod;

namespace {

// Straightforward polytabloid expansion: apply every column permutation to
// the tableau, record the tabloid as the row index of each entry, and sum
// signs. Independent of the packed implementation under test.
std::map<std::vector<int>, long long> naive_polytabloid(const StandardTableau& t) {
    const int n = t.shape.size();
    std::vector<std::vector<int>> columns;
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
            if (columns.size() <= c)
                columns.resize(c + 1);
            columns[c].push_back(t.rows[r][c]);
        }
    std::map<std::vector<int>, long long> out;
    std::vector<std::vector<int>> perm(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        perm[c].resize(columns[c].size());
        std::iota(perm[c].begin(), perm[c].end(), 0);
    }
    auto sign_of = [](const std::vector<int>& v) {
        int s = 1;
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j)
                if (v[i] > v[j])
                    s = -s;
        return s;
    };
    auto rec = [&](auto&& self, std::size_t c) -> void {
        if (c == columns.size()) {
            std::vector<int> row_of(static_cast<std::size_t>(n) + 1, 0);
            int s = 1;
            for (std::size_t k = 0; k < columns.size(); ++k) {
                s *= sign_of(perm[k]);
                for (std::size_t r = 0; r < columns[k].size(); ++r)
                    row_of[static_cast<std::size_t>(columns[k][static_cast<std::size_t>(perm[k][r])])] = static_cast<int>(r);
            }
            out[row_of] += s;
            return;
        }
        std::sort(perm[c].begin(), perm[c].end());
        do
            self(self, c + 1);
        while (std::next_permutation(perm[c].begin(), perm[c].end()));
    };
    rec(rec, 0);
    return out;
}

std::vector<std::vector<long long>> naive_gram(const Partition& lambda) {
    auto tableaux = standard_tableaux(lambda);
    std::vector<std::map<std::vector<int>, long long>> e;
    for (const auto& t : tableaux)
        e.push_back(naive_polytabloid(t));
    std::vector<std::vector<long long>> g(tableaux.size(), std::vector<long long>(tableaux.size(), 0));
    for (std::size_t a = 0; a < e.size(); ++a)
        for (std::size_t b = 0; b < e.size(); ++b)
            for (const auto& [key, coeff] : e[a])
                if (auto it = e[b].find(key); it != e[b].end())
                    g[a][b] += coeff * it->second;
    return g;
}

std::vector<Partition> regular_up_to(int n, PrimeChar p) {
    std::vector<Partition> out;
    for (int m = 1; m <= n; ++m)
        for (auto& lambda : regular_partitions_of(m, p))
            out.push_back(lambda);
    return out;
}

} // namespace

TEST(Specht, StandardTableaux) {
    EXPECT_EQ(standard_tableaux({2, 1}).size(), 2u);
    EXPECT_EQ(standard_tableaux({6}).size(), 1u);
    EXPECT_EQ(standard_tableaux({2, 2}).size(), 2u);
    for (int n = 1; n <= 8; ++n)
        for (const auto& lambda : partitions_of(n)) {
            auto all = standard_tableaux(lambda);
            EXPECT_EQ(standard_tableau_count(lambda), all.size());
            for (const auto& t : all)
                EXPECT_TRUE(t.is_standard());
        }
}

TEST(Specht, GramExamples) {
    EXPECT_EQ(integer_gram_matrix({2, 1}), (std::vector<std::vector<long long>>{{2, 1}, {1, 2}}));
    EXPECT_EQ(integer_gram_matrix({5}), (std::vector<std::vector<long long>>{{1}}));
    // Polytabloids of (2,2) each have four terms and share two tabloids,
    // both with matching signs.
    EXPECT_EQ(integer_gram_matrix({2, 2}), (std::vector<std::vector<long long>>{{4, 2}, {2, 4}}));
    EXPECT_EQ(gram_matrix({2, 2}, PrimeChar(2)).rank(), 0u);
    EXPECT_EQ(gram_matrix({2, 2}, PrimeChar(3)).rank(), 1u);
}

TEST(Specht, GramMatchesNaiveExpansion) {
    for (int n = 1; n <= 7; ++n)
        for (const auto& lambda : partitions_of(n))
            EXPECT_EQ(integer_gram_matrix(lambda), naive_gram(lambda)) << lambda;
}

TEST(Specht, GramSymmetricAndRankInvariantUnderReordering) {
    std::mt19937 rng(4);
    for (const auto& lambda : regular_up_to(8, PrimeChar(3))) {
        auto g = gram_matrix(lambda, PrimeChar(3));
        EXPECT_EQ(g, g.transpose());
        std::vector<std::size_t> order(g.rows());
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        EXPECT_EQ(g.submatrix(order, order).rank(), g.rank());
    }
}

TEST(Specht, DimensionExamples) {
    EXPECT_EQ(dim_irreducible({2, 1}, PrimeChar(3)), 1);
    EXPECT_EQ(dim_irreducible({2, 1}, PrimeChar(2)), 2);
    EXPECT_EQ(dim_irreducible({3, 2}, PrimeChar(2)), 4);
    EXPECT_EQ(dim_irreducible({5, 1}, PrimeChar(3)), 4);
    EXPECT_THROW(dim_irreducible({1, 1}, PrimeChar(2)), error);
}

TEST(Specht, DimensionEqualsHookCountAbovePrime) {
    for (int p : {5, 7, 11}) {
        PrimeChar q(p);
        for (const auto& lambda : regular_up_to(std::min(p - 1, 8), q))
            EXPECT_EQ(dim_irreducible(lambda, q), standard_tableau_count(lambda)) << lambda << " p=" << p;
    }
}

TEST(Specht, NaturalModuleDimensions) {
    for (int p : {2, 3, 5, 7})
        for (int n = 2; n <= 10; ++n) {
            if (p == 2 && n == 2)
                continue; // (1,1) is not 2-regular
            PrimeChar q(p);
            EXPECT_EQ(dim_irreducible(Partition{n}, q), 1);
            int expected = n % p == 0 ? n - 2 : n - 1;
            EXPECT_EQ(dim_irreducible({n - 1, 1}, q), expected) << n << " p=" << p;
        }
}

TEST(Specht, DimensionBoundedByTableaux) {
    for (int p : {2, 3}) {
        PrimeChar q(p);
        for (const auto& lambda : regular_up_to(8, q)) {
            auto g = gram_matrix(lambda, q);
            auto f = standard_tableau_count(lambda);
            EXPECT_LE(dim_irreducible(lambda, q), f);
            EXPECT_EQ(dim_irreducible(lambda, q) == f, g.inverted().has_value());
        }
    }
}

TEST(Specht, OracleCaps) {
    OracleCaps tiny{3, 100};
    try {
        dim_irreducible({3, 2}, PrimeChar(2), tiny);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::oracle_out_of_range);
    }
    OracleCaps few_tabloids{4000, 5};
    EXPECT_THROW(gram_matrix({2, 2}, PrimeChar(3), few_tabloids), error);
}

TEST(Specht, GeneratorExamples) {
    auto trivial = irreducible_action({5}, PrimeChar(3));
    ASSERT_EQ(trivial.generators.size(), 4u);
    for (const auto& g : trivial.generators)
        EXPECT_EQ(g, PrimeFieldMatrix::identity(1, 3));

    auto sign = irreducible_action({2, 1}, PrimeChar(3));
    ASSERT_EQ(sign.dim, 1u);
    for (const auto& g : sign.generators)
        EXPECT_EQ(g(0, 0), 2u);

    auto two = irreducible_action({2, 1}, PrimeChar(2));
    ASSERT_EQ(two.dim, 2u);
    // s_1 has a fixed vector; s_1 and s_2 together have none.
    EXPECT_EQ((two.generators[0] - two.identity()).nullspace().cols(), 1u);
    auto stacked = PrimeFieldMatrix(4, 2, 2);
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t j = 0; j < 2; ++j) {
            stacked(k, j) = (two.generators[0] - two.identity())(k, j);
            stacked(k + 2, j) = (two.generators[1] - two.identity())(k, j);
        }
    EXPECT_EQ(stacked.nullspace().cols(), 0u);
}

TEST(Specht, CoxeterRelations) {
    for (int p : {2, 3, 5}) {
        PrimeChar q(p);
        for (const auto& lambda : regular_up_to(7, q)) {
            auto m = irreducible_action(lambda, q);
            EXPECT_EQ(static_cast<int>(m.dim), dim_irreducible(lambda, q));
            EXPECT_TRUE(satisfies_coxeter_relations(m)) << lambda << " p=" << p;
        }
    }
}

TEST(Specht, MinimalA) {
    for (int n = 2; n <= 8; ++n)
        for (int p : {2, 3, 5})
            EXPECT_EQ(minimal_a(Partition{n}, PrimeChar(p)), 1);
    EXPECT_EQ(minimal_a({5, 1}, PrimeChar(3)), 2);
    EXPECT_EQ(minimal_a({2, 1}, PrimeChar(2)), 1);
    // The natural module of S_n in characteristic p not dividing n
    // restricted to S_{n-1} contains the trivial module.
    EXPECT_EQ(minimal_a({4, 1}, PrimeChar(3)), 1);
}

TEST(Specht, TwistedTrace) {
    EXPECT_TRUE(twisted_trace_check({3}, PrimeChar(3), 32, 1));
    EXPECT_TRUE(twisted_trace_check({6}, PrimeChar(3), 32, 1));
    EXPECT_TRUE(twisted_trace_check({3, 2}, PrimeChar(2), 32, 1));
    // The sign twist separates the trivial module from itself for p odd.
    auto trivial = irreducible_action({3}, PrimeChar(3));
    EXPECT_FALSE(twisted_trace_check(trivial, trivial, 32, 1));
    auto sign = irreducible_action({2, 1}, PrimeChar(3));
    EXPECT_TRUE(twisted_trace_check(trivial, sign, 32, 1));
    for (int p : {3, 5}) {
        PrimeChar q(p);
        for (const auto& lambda : regular_up_to(7, q))
            EXPECT_TRUE(twisted_trace_check(lambda, q, 32, 7)) << lambda << " p=" << p;
    }
}

TEST(Specht, WordTrace) {
    auto m = irreducible_action({3, 1}, PrimeChar(5));
    EXPECT_EQ(word_trace(m, {}), 3u);
    // a transposition has trace 1 on the 3-dimensional natural quotient
    EXPECT_EQ(word_trace(m, {1}), 1u);
    // s_1 s_1 = 1
    EXPECT_EQ(word_trace(m, {1, 1}), 3u);
    // 3-cycle: trace 0 on the reflection representation of S_4
    EXPECT_EQ(word_trace(m, {1, 2}), 0u);
}
