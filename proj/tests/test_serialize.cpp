#include <doctest.h>

#include "superchar/serialize.hpp"

using namespace superchar;

TEST_CASE("round trips") {
    DominantWeight d(3, {-3}, {2, 2, -1}, Partition{3, 1});
    CHECK(dominant_from_json(dominant_json(d)) == d);
    Weight w(std::map<int, int>{{-2, 1}, {1, 3}, {4, -2}});
    CHECK(weight_from_json(weight_json(w)) == w);
    CHECK(weight_json(w).dump() == R"({"coords":{"-2":1,"1":3,"4":-2}})");
    LaurentPoly p = LaurentPoly::monomial(-1, -1) + LaurentPoly::monomial(2, 3);
    CHECK(laurent_from_json(laurent_json(p)) == p);
    CHECK(laurent_json(p).dump() == R"({"-1":-1,"2":3})");
    BigInt huge = BigInt(1) << 80;
    CHECK(big_from_json(big_json(huge)) == huge);
    CHECK(big_json(huge).is_string());
}

TEST_CASE("defaults and validation") {
    auto d = dominant_from_json(Json::parse(R"({"neg":[1,0]})"), 2, {-2});
    CHECK(d.m == 2);
    CHECK(d.Y == std::vector<int>{-2});
    CHECK_THROWS(partition_from_json(Json::parse("[1,2]")));
    CHECK_THROWS(partition_from_json(Json::parse("[-1]")));
    CHECK(theta_json(theta(Partition{7, 6, 3, 3, 1})).dump() == R"({"1":5,"2":6,"3":3,"4":4,"5":2})");
}

TEST_CASE("character terms sorted by depth") {
    DominantWeight d(1, {}, {0}, Partition{});
    auto j = character_json(ch_parabolic_verma(d, Algebra::g, Window{3, 3, 2}));
    int last = -1;
    for (const auto& t : j.at("terms")) {
        Weight w = weight_from_json(t.at("weight"));
        int dep = depth(to_standard(d), w, Algebra::g, 1);
        CHECK(dep >= last);
        last = dep;
    }
    CHECK(j.at("terms").size() > 1);
}
