#include <gtest/gtest.h>

#include "symmod/partition.hpp"

using namespace symmod;

namespace {

std::string describe(const std::vector<BoundaryNode>& seq) {
    std::string out;
    for (const auto& b : seq) {
        out += "(" + std::to_string(b.node.row) + "," + std::to_string(b.node.col) + ")";
        out += b.kind == NodeKind::addable ? '+' : '-';
        out += std::to_string(b.res.value()) + " ";
    }
    return out;
}

} // namespace

TEST(Partition, ParseAndPrint) {
    EXPECT_EQ(Partition::parse("5,1"), (Partition{5, 1}));
    EXPECT_EQ(Partition::parse(""), Partition());
    EXPECT_EQ(Partition::parse("8,2,1,1").to_string(), "8,2,1,1");
    EXPECT_EQ(Partition::parse("8,2,1,1").size(), 12);
    EXPECT_THROW(Partition::parse("1,2"), error);
    EXPECT_THROW(Partition::parse("3,,1"), error);
    EXPECT_THROW(Partition::parse("3,0"), error);
    EXPECT_THROW(Partition::parse("a"), error);
}

TEST(Partition, PrimeCharValidation) {
    EXPECT_EQ(PrimeChar(2).delta(), 1);
    EXPECT_EQ(PrimeChar(7).delta(), 0);
    EXPECT_THROW(PrimeChar(1), error);
    EXPECT_THROW(PrimeChar(9), error);
    try {
        PrimeChar bad(4);
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::not_prime);
    }
}

TEST(Partition, Regularity) {
    EXPECT_FALSE(is_p_regular({2, 1, 1, 1}, PrimeChar(3)));
    EXPECT_TRUE(is_p_regular({8, 5}, PrimeChar(3)));
    EXPECT_FALSE(is_p_regular({1, 1}, PrimeChar(2)));
    EXPECT_TRUE(is_p_regular({}, PrimeChar(2)));
}

TEST(Partition, Residues) {
    EXPECT_EQ(residue({1, 1}, PrimeChar(5)).value(), 0);
    EXPECT_EQ(residue({2, 1}, PrimeChar(3)).value(), 2);
    EXPECT_EQ(residue({1, 5}, PrimeChar(3)).value(), 1);
    EXPECT_EQ((-ResidueClass(1, PrimeChar(3))).value(), 2);
    EXPECT_EQ((-ResidueClass(0, PrimeChar(3))).value(), 0);
}

TEST(Partition, ResidueShiftInvariance) {
    for (int p : {2, 3, 5, 7}) {
        PrimeChar q(p);
        for (int r = 1; r <= 6; ++r)
            for (int c = 1; c <= 6; ++c) {
                auto base = residue({r, c}, q);
                EXPECT_EQ(residue({r + p, c}, q), base);
                EXPECT_EQ(residue({r, c + p}, q), base);
                for (int k = 1; k <= 4; ++k)
                    EXPECT_EQ(residue({r + k, c + k}, q), base);
            }
    }
}

TEST(Partition, BoundaryNodes) {
    EXPECT_EQ(describe(boundary_nodes({5, 1}, PrimeChar(3))), "(3,1)+1 (2,1)-2 (2,2)+0 (1,5)-1 (1,6)+2 ");
    EXPECT_EQ(describe(boundary_nodes({}, PrimeChar(5))), "(1,1)+0 ");
    EXPECT_EQ(describe(boundary_nodes({2, 1}, PrimeChar(2))), "(3,1)+0 (2,1)-1 (2,2)+0 (1,2)-1 (1,3)+0 ");
}

TEST(Partition, BoundaryAlternates) {
    for (int n = 0; n <= 12; ++n)
        for (const auto& lambda : partitions_of(n)) {
            auto seq = boundary_nodes(lambda, PrimeChar(3));
            ASSERT_FALSE(seq.empty());
            EXPECT_EQ(seq.front().kind, NodeKind::addable);
            EXPECT_EQ(seq.back().kind, NodeKind::addable);
            for (std::size_t k = 1; k < seq.size(); ++k)
                EXPECT_NE(seq[k].kind, seq[k - 1].kind) << lambda;
            // rows never increase along the rim
            for (std::size_t k = 1; k < seq.size(); ++k)
                EXPECT_LE(seq[k].node.row, seq[k - 1].node.row);
        }
}

TEST(Partition, RemoveAndAdd) {
    EXPECT_EQ(remove_node({5, 1}, {1, 5}), (Partition{4, 1}));
    EXPECT_EQ(remove_node({5, 1}, {2, 1}), (Partition{5}));
    try {
        remove_node({5, 1}, {1, 3});
        FAIL() << "interior node accepted";
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::not_removable);
    }
    EXPECT_THROW(add_node({5, 1}, {1, 3}), error);
    EXPECT_EQ(add_node({5, 1}, {3, 1}), (Partition{5, 1, 1}));
}

TEST(Partition, RemoveAddRoundTrip) {
    for (int n = 1; n <= 12; ++n)
        for (const auto& lambda : partitions_of(n))
            for (const auto& a : removable_nodes(lambda))
                EXPECT_EQ(add_node(remove_node(lambda, a), a), lambda);
}

TEST(Partition, RegularityNotClosedUnderRemoval) {
    PrimeChar two(2);
    Partition lambda{2, 1};
    ASSERT_TRUE(is_p_regular(lambda, two));
    auto mu = remove_node(lambda, {1, 2});
    EXPECT_EQ(mu, (Partition{1, 1}));
    EXPECT_FALSE(is_p_regular(mu, two));
}

TEST(Partition, Attach) {
    EXPECT_EQ(attach(12, {2, 1, 1}), (Partition{8, 2, 1, 1}));
    EXPECT_EQ(attach(13, {5}), (Partition{8, 5}));
    try {
        attach(6, {4});
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::first_part_too_small);
    }
}

TEST(Partition, Enumeration) {
    // partition numbers p(0..12)
    const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 0; n <= 12; ++n) {
        auto all = partitions_of(n);
        EXPECT_EQ(static_cast<int>(all.size()), counts[n]);
        EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
        for (const auto& lambda : all)
            EXPECT_EQ(lambda.size(), n);
    }
    // 2-regular partitions are partitions into distinct parts: q(10) = 10
    EXPECT_EQ(regular_partitions_of(10, PrimeChar(2)).size(), 10u);
    // p-regular count equals the count of partitions with no part divisible by p
    for (int p : {2, 3, 5})
        for (int n = 0; n <= 12; ++n) {
            std::size_t no_multiple = 0;
            for (const auto& lambda : partitions_of(n)) {
                bool ok = true;
                for (int part : lambda.parts())
                    ok = ok && part % p != 0;
                no_multiple += ok ? 1 : 0;
            }
            EXPECT_EQ(regular_partitions_of(n, PrimeChar(p)).size(), no_multiple) << n << " " << p;
        }
}
