#include <random>

#include <gtest/gtest.h>

#include "support/fixtures.hpp"

using namespace intpat;
using intpat::testing::ext;
using intpat::testing::pat;

TEST(Patterns, MeetIsPerDimensionHull) {
    const auto a = pat({{5, 5}, {7, 7}, {6, 6}});
    const auto b = pat({{6, 6}, {8, 8}, {4, 4}});
    const auto c = pat({{5, 5}, {8, 8}, {5, 5}});
    EXPECT_EQ(meet(meet(a, b), c), pat({{5, 6}, {7, 8}, {4, 6}}));
    EXPECT_EQ(meet(a, a), a);
    EXPECT_EQ(meet(pat({{4, 4}}), pat({{6, 6}})), pat({{4, 6}}));
    EXPECT_THROW(meet(pat({{1, 1}}), pat({{1, 1}, {2, 2}})), PreconditionError);
}

TEST(Patterns, SubsumptionOrder) {
    EXPECT_TRUE(leq(pat({{4, 6}, {6, 8}}), pat({{4, 5}, {6, 8}})));
    EXPECT_FALSE(leq(pat({{4, 5}, {6, 8}}), pat({{4, 6}, {6, 8}})));
    const auto d = pat({{1, 3}, {2, 2}});
    EXPECT_TRUE(leq(d, d));
    EXPECT_FALSE(less(d, d));
    EXPECT_FALSE(leq(pat({{4, 5}}), pat({{5, 6}})));
    EXPECT_FALSE(comparable(pat({{4, 5}}), pat({{5, 6}})));
}

TEST(Patterns, ImageAndSupport) {
    const auto ds = intpat::testing::running_example();
    const auto d = pat({{5, 6}, {7, 8}, {4, 6}});
    EXPECT_EQ(image(d, ds), ext(ds, {"g1", "g2", "g5"}));
    EXPECT_EQ(support(d, ds), 3u);
    EXPECT_EQ(image(pat({{4, 6}, {7, 9}, {4, 8}}), ds), Extent(5, true));
}

TEST(Patterns, ImagesOfFourBoxesInTwoDimensions) {
    const auto ds = intpat::testing::running_example_m1_m3();
    EXPECT_EQ(image(pat({{4, 5}, {5, 8}}), ds), ext(ds, {"g1", "g3", "g4", "g5"}));
    EXPECT_EQ(image(pat({{4, 5}, {4, 5}}), ds), ext(ds, {"g3", "g5"}));
    EXPECT_EQ(image(pat({{5, 6}, {4, 4}}), ds), ext(ds, {"g2"}));
    EXPECT_EQ(image(pat({{6, 6}, {4, 8}}), ds), ext(ds, {"g2"}));
}

TEST(Patterns, ExtentMeet) {
    const auto ds = intpat::testing::running_example();
    EXPECT_EQ(extent_meet(ext(ds, {"g1", "g2", "g5"}), ds), pat({{5, 6}, {7, 8}, {4, 6}}));
    EXPECT_EQ(extent_meet(ext(ds, {"g1"}), ds), pat({{5, 5}, {7, 7}, {6, 6}}));
    EXPECT_EQ(extent_meet(Extent(5, true), ds), pat({{4, 6}, {7, 9}, {4, 8}}));
    EXPECT_THROW(extent_meet(Extent(5), ds), PreconditionError);
}

TEST(Patterns, Closure) {
    const auto ds = intpat::testing::running_example();
    EXPECT_EQ(closure(pat({{5, 6}, {7, 8}, {4, 8}}), ds), pat({{5, 6}, {7, 8}, {4, 6}}));
    EXPECT_EQ(closure(pat({{4, 5}, {7, 9}, {4, 8}}), ds), pat({{4, 5}, {7, 9}, {5, 8}}));
    const auto c = closure(pat({{4, 5}, {8, 9}, {4, 6}}), ds);
    EXPECT_EQ(closure(c, ds), c);
    EXPECT_THROW(closure(pat({{6, 6}, {9, 9}, {8, 8}}), ds), PreconditionError);
}

TEST(Patterns, ClassPredicatesOnProjection) {
    const auto ds = intpat::testing::running_example_m1_m3();
    EXPECT_TRUE(is_closed(pat({{4, 5}, {5, 8}}), ds));
    EXPECT_FALSE(is_closed(pat({{4, 6}, {5, 8}}), ds));
    EXPECT_TRUE(is_generator(pat({{4, 6}, {5, 8}}), ds));
    EXPECT_TRUE(is_generator(pat({{4, 5}, {4, 8}}), ds));
    EXPECT_FALSE(is_generator(pat({{4, 5}, {5, 8}}), ds));
    EXPECT_TRUE(equivalent(pat({{4, 6}, {5, 8}}), pat({{4, 5}, {4, 8}}), ds));
    EXPECT_TRUE(is_frequent(pat({{4, 5}, {5, 8}}), 3, ds));
    EXPECT_FALSE(is_frequent(pat({{4, 5}, {4, 5}}), 3, ds));
    EXPECT_FALSE(is_frequent(pat({{5, 6}, {4, 4}}), 3, ds));
    EXPECT_FALSE(is_frequent(pat({{6, 6}, {4, 8}}), 3, ds));
}

TEST(Patterns, RankConversionValidatesBounds) {
    const auto ds = intpat::testing::running_example();
    EXPECT_THROW(to_ranks(pat({{4, 7}, {7, 9}, {4, 8}}), ds), PreconditionError);
    EXPECT_THROW(to_ranks(pat({{6, 4}, {7, 9}, {4, 8}}), ds), PreconditionError);
    EXPECT_THROW(to_ranks(pat({{4, 6}}), ds), PreconditionError);
    const auto d = pat({{5, 6}, {8, 9}, {5, 8}});
    EXPECT_EQ(to_values(to_ranks(d, ds), ds), d);
}

TEST(Patterns, SearchSpaceSize) {
    EXPECT_EQ(search_space_size(intpat::testing::running_example()), 360);
    EXPECT_EQ(search_space_size(NumericalDataset::from_rows({{7}})), 1);
    EXPECT_EQ(search_space_size(NumericalDataset::from_rows({{4}, {5}, {6}})), 6);
}

TEST(Patterns, RankSpaceAgreesWithValueOperations) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const auto ds = intpat::testing::random_dataset(rng);
        const PatternSpace space(ds);
        for (const auto& d : enumerate_all(ds)) {
            const auto r = to_ranks(d, ds);
            const auto img = image(d, ds);
            ASSERT_EQ(space.image(r), img);
            if (img.empty()) continue;
            ASSERT_EQ(to_values(space.closure(r), ds), closure(d, ds));
            ASSERT_EQ(space.is_generator(r), is_generator(d, ds));
        }
    }
}

// Properties checked over every pattern and every non-empty object subset of small
// random datasets.
class PatternProperties : public ::testing::TestWithParam<unsigned> {};

TEST_P(PatternProperties, GaloisConnectionAndOrder) {
    std::mt19937 rng(GetParam());
    const auto ds = intpat::testing::random_dataset(rng, 5, 2, 4);
    const auto all = enumerate_all(ds);
    const std::size_t n = ds.num_objects();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        Extent a(n);
        for (ObjectIndex g = 0; g < n; ++g)
            if (mask & (1u << g)) a.insert(g);
        const auto box = extent_meet(a, ds);
        for (const auto& d : all) ASSERT_EQ(a.is_subset_of(image(d, ds)), leq(d, box));
    }
    for (const auto& c : all)
        for (const auto& d : all) {
            const auto ic = image(c, ds);
            const auto id = image(d, ds);
            if (leq(c, d)) {
                ASSERT_TRUE(id.is_subset_of(ic)); // anti-monotone
                if (ic.size() == id.size()) {
                    ASSERT_EQ(ic, id);
                }
            }
            // meet is the greatest lower bound
            const auto m = meet(c, d);
            ASSERT_TRUE(leq(m, c) && leq(m, d));
            for (const auto& e : all)
                if (leq(e, c) && leq(e, d)) {
                    ASSERT_TRUE(leq(e, m));
                }
        }
}

TEST_P(PatternProperties, OneStepGeneratorTestMatchesDefinition) {
    std::mt19937 rng(GetParam() + 1000);
    const auto ds = intpat::testing::random_dataset(rng);
    const auto all = enumerate_all(ds);
    for (const auto& d : all) {
        const auto img = image(d, ds);
        bool definitional = true;
        for (const auto& e : all)
            if (less(e, d) && image(e, ds) == img) {
                definitional = false;
                break;
            }
        ASSERT_EQ(is_generator(d, ds), definitional);
        bool smallest = true;
        for (const auto& e : all)
            if (less(d, e) && image(e, ds) == img) {
                smallest = false;
                break;
            }
        if (!img.empty()) {
            ASSERT_EQ(is_closed(d, ds), smallest);
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Random, PatternProperties, ::testing::Range(0u, 25u));
