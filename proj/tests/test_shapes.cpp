#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "qrook/errors.hpp"
#include "qrook/shapes.hpp"

using namespace qrook;

namespace {

MultiPartition mp(std::vector<std::vector<int>> comps) {
    std::vector<Partition> ps;
    for (auto& c : comps) ps.emplace_back(c);
    return MultiPartition(ps);
}

// Hook length formula, independent of the tableau enumerator.
std::size_t hook_count(const Partition& p) {
    std::size_t n = static_cast<std::size_t>(p.size());
    double f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= static_cast<double>(i);
    for (int r = 1; r <= p.length(); ++r)
        for (int c = 1; c <= p.row(r); ++c) {
            int leg = 0;
            while (p.row(r + leg + 1) >= c) ++leg;
            f /= static_cast<double>(p.row(r) - c + leg + 1);
        }
    return static_cast<std::size_t>(f + 0.5);
}

Shape straight(const Partition& p) { return SkewShape(p, Partition()); }

std::size_t binom(int n, int k) {
    std::size_t out = 1;
    for (int i = 1; i <= k; ++i) out = out * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return out;
}

}  // namespace

TEST(Partition, Validation) {
    EXPECT_THROW(Partition({1, 2}), InvalidArgument);
    EXPECT_THROW(Partition({2, 0}), InvalidArgument);
    EXPECT_NO_THROW(Partition({2, 2, 1}));
    EXPECT_THROW(SkewShape(Partition({1}), Partition({2})), InvalidArgument);
    EXPECT_THROW(MultiPartition(std::vector<Partition>{}), InvalidArgument);
}

TEST(Partition, EnumerationOrder) {
    auto ps = enumerate_partitions(3);
    ASSERT_EQ(ps.size(), 3u);
    EXPECT_EQ(ps[0], Partition({3}));
    EXPECT_EQ(ps[1], Partition({2, 1}));
    EXPECT_EQ(ps[2], Partition({1, 1, 1}));
    EXPECT_EQ(enumerate_partitions(0).size(), 1u);
    EXPECT_EQ(enumerate_partitions(6).size(), 11u);
}

TEST(Tableaux, SmallCounts) {
    // SYT counts frozen from tests/oracle/derive.py (hook length formula)
    EXPECT_EQ(count_standard_tableaux(straight(Partition({3, 2}))), 5u);
    EXPECT_EQ(count_standard_tableaux(straight(Partition({2, 2, 1}))), 5u);
    EXPECT_EQ(count_standard_tableaux(straight(Partition({4, 2, 1}))), 35u);
    EXPECT_EQ(count_standard_tableaux(mp({{2, 1}, {1}})), 8u);
    EXPECT_EQ(count_standard_tableaux(mp({{2}, {1, 1}})), 6u);
    EXPECT_EQ(count_standard_tableaux(mp({{1}, {1}, {1}})), 6u);
    EXPECT_EQ(count_standard_tableaux(SkewShape(Partition({2, 1}), Partition({1}))), 2u);
    EXPECT_EQ(enumerate_standard_tableaux(mp({{}, {}})).size(), 1u);
}

TEST(Tableaux, CanonicalOrderAndStandardness) {
    MultiPartition lam = mp({{1}, {1}});
    auto ts = enumerate_standard_tableaux(lam);
    ASSERT_EQ(ts.size(), 2u);
    EXPECT_EQ(ts[0].at(1), (Box{1, 1, 1}));
    EXPECT_EQ(ts[1].at(1), (Box{2, 1, 1}));
    EXPECT_TRUE(std::is_sorted(ts.begin(), ts.end()));
    for (const auto& t : ts) EXPECT_TRUE(is_standard(t, lam));
    EXPECT_FALSE(is_standard(ts[0].swapped(1), straight(Partition({2}))));
}

TEST(TableauxProperty, EnumerationMatchesHookFormula) {
    for (int n = 0; n <= 7; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            auto ts = enumerate_standard_tableaux(straight(p));
            EXPECT_EQ(ts.size(), hook_count(p)) << p.to_string();
            EXPECT_EQ(count_standard_tableaux(straight(p)), ts.size());
            EXPECT_TRUE(std::is_sorted(ts.begin(), ts.end()));
            EXPECT_EQ(std::adjacent_find(ts.begin(), ts.end()), ts.end());
            for (const auto& t : ts) EXPECT_TRUE(is_standard(t, straight(p)));
        }
}

TEST(TableauxProperty, MultipartitionCountIsMultinomialTimesHooks) {
    for (int k = 0; k <= 5; ++k)
        for (const auto& lam : index_set_H(k, 2)) {
            const auto& a = lam.component(1);
            const auto& b = lam.component(2);
            EXPECT_EQ(count_standard_tableaux(lam), binom(k, a.size()) * hook_count(a) * hook_count(b)) << lam.to_string();
        }
}

TEST(TableauxProperty, ShiftedSkewCountIsBinomialMinusOne) {
    for (int k = 2; k <= 7; ++k)
        for (int d = 1; d < k; ++d) {
            SkewShape s(Partition({k - 1, d}), d > 1 ? Partition({d - 1}) : Partition());
            EXPECT_EQ(count_standard_tableaux(s), binom(k, d) - 1) << k << "," << d;
        }
}

TEST(IndexSets, Sizes) {
    // frozen from tests/oracle/derive.py
    const std::size_t a_sizes[] = {1, 2, 4, 7, 12};
    const std::size_t h_sizes[] = {1, 2, 5, 10, 20};
    for (int k = 0; k <= 4; ++k) {
        EXPECT_EQ(index_set_A(k).size(), a_sizes[k]);
        EXPECT_EQ(index_set_H(k, 2).size(), h_sizes[k]);
    }
    for (const auto& lam : index_set_A(4)) EXPECT_LE(lam.component(1).length(), 1);
}

TEST(Contents, Rules) {
    EXPECT_EQ(content(Box{0, 1, 3}), RatFunc::q_power(4));
    EXPECT_EQ(content(Box{0, 2, 1}), RatFunc::q_power(-2));
    auto cyc = ContentRule::cyclotomic({RatFunc(2), RatFunc(5)});
    EXPECT_EQ(content(Box{2, 1, 2}, cyc), RatFunc::q_power(2, 5));
    EXPECT_EQ(content(Box{1, 2, 1}, cyc), RatFunc::q_power(-2, 2));
    auto sh = ContentRule::shifted(RatFunc(3));
    EXPECT_EQ(content(Box{0, 1, 1}, sh), RatFunc::q_power(2, 3));
    EXPECT_THROW(content(Box{3, 1, 1}, cyc), InvalidArgument);
}

TEST(BoxOps, AddRemove) {
    Partition p({2, 1});
    auto add = addable_boxes(p);
    EXPECT_EQ(add.size(), 3u);
    auto rem = removable_boxes(p);
    ASSERT_EQ(rem.size(), 2u);
    EXPECT_EQ(remove_box(p, rem[0]).size(), 2);
    EXPECT_THROW(remove_box(p, Box{0, 1, 1}), InvalidArgument);
    MultiPartition lam = mp({{1}, {2}});
    EXPECT_EQ(removable_boxes(lam).size(), 2u);
    EXPECT_EQ(add_box(lam, Box{1, 1, 2}), mp({{2}, {2}}));
}

TEST(Bratteli, LevelSizesAndEdges) {
    auto b = bratteli(4, BratteliFamily::TypeB);
    auto a = bratteli(4, BratteliFamily::AQuotient);
    std::vector<std::size_t> bsz, asz, bed, aed;
    for (const auto& l : b.levels) bsz.push_back(l.size());
    for (const auto& l : a.levels) asz.push_back(l.size());
    for (const auto& e : b.edges) bed.push_back(e.size());
    for (const auto& e : a.edges) aed.push_back(e.size());
    EXPECT_EQ(bsz, (std::vector<std::size_t>{1, 2, 5, 10, 20}));
    EXPECT_EQ(asz, (std::vector<std::size_t>{1, 2, 4, 7, 12}));
    EXPECT_EQ(bed[0], 2u);
    EXPECT_EQ(bed[1], 6u);
    EXPECT_EQ(bed[2], 16u);
    EXPECT_EQ(aed[0], 2u);
    EXPECT_EQ(aed[1], 5u);
    EXPECT_EQ(aed[2], 11u);
}

TEST(Bratteli, DotIsDeterministic) {
    auto g = bratteli(3, BratteliFamily::AQuotient);
    EXPECT_EQ(to_dot(g), to_dot(bratteli(3, BratteliFamily::AQuotient)));
    EXPECT_NE(to_dot(g).find("rank=same"), std::string::npos);
}

TEST(BratteliProperty, DimensionRecursion) {
    for (auto fam : {BratteliFamily::TypeB, BratteliFamily::AQuotient}) {
        auto g = bratteli(5, fam);
        for (std::size_t m = 1; m < g.levels.size(); ++m)
            for (std::size_t v = 0; v < g.levels[m].size(); ++v) {
                std::size_t sum = 0;
                for (const auto& [lo, hi] : g.edges[m - 1])
                    if (hi == v) sum += count_standard_tableaux(g.levels[m - 1][lo]);
                EXPECT_EQ(sum, count_standard_tableaux(g.levels[m][v]));
            }
    }
}
