#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "qrook/presentations.hpp"
#include "qrook/rook.hpp"

using namespace qrook;

TEST(PartialInjection, BasicsAndValidation) {
    auto id = PartialInjection::identity(3);
    EXPECT_EQ(id.rank(), 3);
    EXPECT_EQ(PartialInjection::zero(3).rank(), 0);
    EXPECT_EQ(PartialInjection::partial_identity(3, 2).rank(), 2);
    EXPECT_THROW(validate(PartialInjection{{1, 1, 0}}), InvalidArgument);
    EXPECT_THROW(validate(PartialInjection{{4, 0, 0}}), InvalidArgument);
    EXPECT_THROW(compose(id, PartialInjection::identity(2)), InvalidArgument);
    auto s = PartialInjection::transposition(3, 1);
    EXPECT_EQ(compose(s, s), id);
}

TEST(PartialInjection, MatrixConvention) {
    // 1 sent to 2, 2 undefined
    PartialInjection p{{2, 0}};
    auto m = to_matrix(p);
    EXPECT_EQ(m(1, 0), Rational(1));
    EXPECT_EQ(m.nonzeros(), 1u);
}

TEST(RookCounts, EnumerationFormulaClosure) {
    // frozen from tests/oracle/derive.py
    const long expected[] = {1, 2, 7, 34, 209, 1546};
    for (int k = 0; k <= 5; ++k) {
        EXPECT_EQ(rook_count_formula(k), Integer(expected[k]));
        EXPECT_EQ(enumerate_rook(k).size(), static_cast<std::size_t>(expected[k]));
    }
    for (int k = 1; k <= 4; ++k) {
        auto closure = monoid_closure(k);
        auto all = enumerate_rook(k);
        std::sort(closure.begin(), closure.end());
        EXPECT_EQ(closure, all);
        EXPECT_EQ(monoid_algebra_dimension(k), static_cast<std::size_t>(expected[k]));
    }
}

TEST(RookCounts, EnumerationIsLexicographicAndDistinct) {
    auto all = enumerate_rook(4);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(std::set<PartialInjection>(all.begin(), all.end()).size(), all.size());
}

TEST(RookProperty, MatrixMapIsMultiplicative) {
    auto all = enumerate_rook(3);
    for (const auto& a : all)
        for (const auto& b : all) EXPECT_EQ(to_matrix(compose(a, b)), to_matrix(a) * to_matrix(b));
}

TEST(RookProperty, CompositionIsAssociative) {
    auto all = enumerate_rook(3);
    for (const auto& a : all)
        for (const auto& b : all)
            for (const auto& c : all) EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
}

TEST(RookGenerators, RelationsAtQOne) {
    for (int k = 1; k <= 4; ++k) {
        auto g = generators_q1(k);
        EXPECT_TRUE(verify(g, relations_rook(k), scalars_at(Rational(1))).pass()) << k;
    }
}

TEST(RookGenerators, RegularRepresentationSpansMonoidAlgebra) {
    const std::size_t expected[] = {2, 7, 34};
    for (int k = 1; k <= 3; ++k) {
        auto reg = regular_representation(k);
        EXPECT_EQ(algebra_dimension(reg), expected[k - 1]);
        EXPECT_TRUE(verify(reg, relations_rook(k), scalars_at(Rational(1))).pass());
    }
}
