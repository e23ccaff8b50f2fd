#include <cstdlib>

#include <gtest/gtest.h>

#include "intpat/io.hpp"
#include "support/fixtures.hpp"

using namespace intpat;
using intpat::testing::ext;
using intpat::testing::pat;

TEST(Oracle, EnumeratesSearchSpace) {
    EXPECT_EQ(enumerate_all(intpat::testing::running_example()).size(), 360u);
    const auto one = enumerate_all(NumericalDataset::from_rows({{4}, {5}, {6}}));
    EXPECT_EQ(std::set<IntervalPattern>(one.begin(), one.end()),
              (std::set<IntervalPattern>{pat({{4, 4}}), pat({{5, 5}}), pat({{6, 6}}), pat({{4, 5}}), pat({{5, 6}}),
                                         pat({{4, 6}})}));
    EXPECT_EQ(enumerate_all(NumericalDataset::from_rows({{1, 2}})).size(), 1u);
}

TEST(Oracle, ClassWithTwoIncomparableGenerators) {
    const auto ds = intpat::testing::running_example_m1_m3();
    const auto part = classes(ds, 1);
    const auto key = ext(ds, {"g1", "g3", "g4", "g5"});
    const auto it = std::find_if(part.classes.begin(), part.classes.end(),
                                 [&](const EquivalenceClass& c) { return c.extent == key; });
    ASSERT_NE(it, part.classes.end());
    EXPECT_EQ(it->closed, pat({{4, 5}, {5, 8}}));
    EXPECT_EQ(it->generators, (std::vector<IntervalPattern>{pat({{4, 5}, {4, 8}}), pat({{4, 6}, {5, 8}})}));
    EXPECT_EQ(part.enumerated, 60u);
}

TEST(Oracle, ClosedAndGeneratorProjections) {
    const auto ds = intpat::testing::running_example_m1_m3();
    const auto closed = oracle_closed(ds, 3);
    EXPECT_TRUE(std::any_of(closed.begin(), closed.end(),
                            [](const PatternRecord& r) { return r.pattern == pat({{4, 5}, {5, 8}}); }));
    const auto full = intpat::testing::running_example();
    const auto top = oracle_closed(full, 5);
    ASSERT_EQ(top.size(), 1u);
    EXPECT_EQ(top.front().pattern, extent_meet(Extent(5, true), full));
    EXPECT_EQ(oracle_closed(full, 1).size(), 18u);
    EXPECT_EQ(oracle_generators(full, 1).size(), 44u);
}

TEST(Oracle, ClassMembersAreDefinitional) {
    const auto ds = intpat::testing::running_example();
    for (const auto& c : classes(ds, 1).classes) {
        EXPECT_TRUE(is_closed(c.closed, ds));
        for (const auto& m : c.members) {
            EXPECT_EQ(image(m, ds), c.extent);
            EXPECT_TRUE(leq(m, c.closed));
        }
        for (const auto& g : c.generators) EXPECT_TRUE(is_generator(g, ds));
    }
}

TEST(Oracle, CapIsEnforced) {
    const auto ds = intpat::testing::running_example();
    EXPECT_THROW(enumerate_all(ds, 359), LimitError);
    EXPECT_NO_THROW(enumerate_all(ds, 360));
    EXPECT_THROW(classes(ds, 1, 100), LimitError);
    EXPECT_THROW(classes(ds, 0), PreconditionError);
}

TEST(Oracle, CapFromEnvironment) {
    ::unsetenv("INTPAT_ORACLE_CAP");
    EXPECT_EQ(oracle_cap_from_env(), kDefaultOracleCap);
    ::setenv("INTPAT_ORACLE_CAP", "1234", 1);
    EXPECT_EQ(oracle_cap_from_env(), 1234u);
    ::setenv("INTPAT_ORACLE_CAP", "lots", 1);
    EXPECT_THROW(oracle_cap_from_env(), PreconditionError);
    ::unsetenv("INTPAT_ORACLE_CAP");
}

TEST(Io, PatternJsonRoundTrip) {
    const auto ds = NumericalDataset::from_rows({{5, 7, 6}, {6, 8, 4}});
    const auto p = pat({{5, 6}, {7, 8}, {4, 6}});
    const auto j = pattern_to_json(p, ds);
    EXPECT_EQ(j.dump(), "[[5,6],[7,8],[4,6]]");
    EXPECT_EQ(pattern_from_json(j, ds), p);
    EXPECT_THROW(pattern_from_json(Json::parse("[[1,2]]"), ds), DataError);

    std::istringstream csv("a\n0.5\n1.25\n");
    const auto dec = parse_csv(csv, "mem");
    const IntervalPattern q({{dec.value(0, 0), dec.value(1, 0)}});
    const auto jq = pattern_to_json(q, dec);
    EXPECT_EQ(jq.dump(), "[[0.5,1.25]]");
    EXPECT_EQ(pattern_from_json(jq, dec), q);

    const auto rec = record_to_json(p, Extent(2, {0, 1}), ds);
    EXPECT_EQ(rec.dump(), R"({"pattern":[[5,6],[7,8],[4,6]],"support":2,"extent":["g1","g2"]})");
}
