#include <gtest/gtest.h>

#include <random>

#include "corekit/json.hpp"
#include "corekit/sweeps.hpp"

using namespace corekit;

TEST(PartitionJson, Encoding) {
    EXPECT_EQ(Json(Partition{8, 6, 5, 5, 3, 2, 2, 2, 1}).dump(), "[8,6,5,5,3,2,2,2,1]");
    EXPECT_EQ(Json(Partition{}).dump(), "[]");
    EXPECT_EQ(Json::parse("[3,1,1]").get<Partition>(), Partition({3, 1, 1}));
    EXPECT_EQ(Json::parse("[]").get<Partition>(), Partition{});
}

TEST(PartitionJson, RejectsInvalid) {
    EXPECT_THROW(Json::parse("[1,2]").get<Partition>(), InvalidArgument);
    EXPECT_THROW(Json::parse("[2,0]").get<Partition>(), InvalidArgument);
    EXPECT_THROW(Json::parse("[2,\"x\"]").get<Partition>(), InvalidArgument);
    EXPECT_THROW(Json::parse("{}").get<Partition>(), InvalidArgument);
}

TEST(PartitionJson, RoundTripsRandomPartitions) {
    std::mt19937_64 rng(21);
    for (int n = 0; n < 300; ++n) {
        const Partition p = random_partition(rng, 100);
        ASSERT_EQ(Json::parse(Json(p).dump()).get<Partition>(), p);
    }
}

TEST(AbacusJson, Schema) {
    const Json j = abacus_to_json(kappa_bar_abacus(4));
    EXPECT_EQ(j.dump(), R"({"beads":[1,2,3,4,5,6,10,11,12,13,19,20],"t":8})");
    EXPECT_EQ(abacus_from_json(j), kappa_bar_abacus(4));
    EXPECT_THROW(abacus_from_json(Json::parse(R"({"t":1,"beads":[]})")), InvalidArgument);
    EXPECT_THROW(abacus_from_json(Json::parse(R"({"t":3,"beads":[2,2]})")), InvalidArgument);
}

TEST(EnumerationJson, Schema) {
    const Json j = enumeration_to_json(enumerate_cores({3, 4}));
    EXPECT_EQ(j.at("moduli"), Json::parse("[3,4]"));
    EXPECT_EQ(j.at("count"), 5);
    EXPECT_EQ(j.at("max_size"), 5);
    EXPECT_EQ(j.at("cores"), Json::parse("[[],[1],[1,1],[2],[3,1,1]]"));
}

TEST(CatalanJson, Schema) {
    const Json j = catalan_pair_to_json(make_catalan_core_pair(4));
    EXPECT_EQ(j.at("k"), 4);
    EXPECT_EQ(j.at("kappa_triple").dump(), "[9,9,4,4,4,4,1,1,1,1,1,1]");
    EXPECT_EQ(size(j.at("kappa_pair").get<Partition>()), 160);
    EXPECT_EQ(abacus_from_json(j.at("abacus_triple")), kappa_bar_abacus(4));
}

TEST(CellMapJson, TraceSchemaAndRoundTrip) {
    const Json two = cell_map_to_json(build_bijection(2));
    EXPECT_EQ(two.dump(),
              R"([{"dst":{"col":0,"row":0},"region":"P2","src":{"col":0,"copy":1,"row":0,"slot":0}},)"
              R"({"dst":{"col":0,"row":1},"region":"P1","src":{"col":0,"copy":2,"row":0,"slot":0}}])");
    EXPECT_EQ(cell_map_to_json(build_bijection(1)).dump(), "[]");
    for (Int k = 1; k <= 8; ++k) {
        const CellMap map = build_bijection(k);
        const CellMap back = cell_map_from_json(Json::parse(cell_map_to_json(map).dump()), k);
        ASSERT_EQ(back.entries, map.entries);
        EXPECT_TRUE(verify_bijection(back, k).ok());
    }
    EXPECT_THROW(parse_region("P4"), InvalidArgument);
}
