#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "coulomb/io.hpp"
#include "coulomb/theory.hpp"

using namespace coulomb;

TEST_CASE("sqed preset") {
    const TheorySpec t = preset_sqed(2);
    CHECK(t.group.factor_ranks == std::vector<int>{1});
    CHECK(t.flavor_rank == 2);
    REQUIRE(t.matter.size() == 2);
    for (const auto& w : t.matter) CHECK(w.gauge[0][0] == 1);
    CHECK(t.matter[0].flavor == std::vector<int64_t>{-1, 0});
    CHECK(t.matter[1].flavor == std::vector<int64_t>{0, -1});
}

TEST_CASE("jordan preset weight multiset") {
    const TheorySpec t = preset_jordan(2);
    CHECK(t.flavor_rank == 1);
    std::multiset<std::vector<int64_t>> gauge_parts;
    for (const auto& w : t.matter) {
        gauge_parts.insert(w.gauge[0]);
        CHECK(w.flavor == std::vector<int64_t>{1});
    }
    const std::multiset<std::vector<int64_t>> expected = {{1, 0},  {0, 1}, {0, 0},
                                                          {0, 0},  {1, -1}, {-1, 1}};
    CHECK(gauge_parts == expected);
}

TEST_CASE("two-node preset") {
    const TheorySpec t = preset_two_node(1, 1);
    CHECK(t.matter.size() == 3);
    CHECK(t.matter.back().gauge == std::vector<std::vector<int64_t>>{{-1}, {1}});
    CHECK(t.flavor_node_of_slot == std::vector<int>{0, 1});

    const TheorySpec big = preset_two_node(2, 3);
    CHECK(big.matter.size() == 6);
    CHECK(big.flavor_rank == 5);
}

TEST_CASE("preset shorthand strings") {
    CHECK(parse_preset("sqed:3") == preset_sqed(3));
    CHECK(parse_preset("jordan:2") == preset_jordan(2));
    CHECK(parse_preset("two-node:2,3") == preset_two_node(2, 3));
    CHECK(parse_preset("trivial") == preset_trivial());
    CHECK_THROWS_AS(parse_preset("nonsense:1"), StructuralError);
    CHECK_THROWS_AS(parse_preset("sqed:x"), StructuralError);
    CHECK_THROWS_AS(preset_sqed(0), StructuralError);
}

TEST_CASE("enumerate_dominant examples") {
    const auto gl1 = enumerate_dominant(preset_sqed(1), 1);
    REQUIRE(gl1.size() == 3);
    CHECK(gl1[0].parts[0] == std::vector<int64_t>{1});
    CHECK(gl1[1].parts[0] == std::vector<int64_t>{0});
    CHECK(gl1[2].parts[0] == std::vector<int64_t>{-1});

    const auto gl2 = enumerate_dominant(preset_jordan(2), 1);
    const std::vector<std::vector<int64_t>> expected = {{1, 1},  {1, 0},  {1, -1},
                                                        {0, 0},  {0, -1}, {-1, -1}};
    REQUIRE(gl2.size() == expected.size());
    for (size_t i = 0; i < expected.size(); ++i) CHECK(gl2[i].parts[0] == expected[i]);

    CHECK(enumerate_dominant(preset_two_node(1, 1), 1).size() == 9);
    CHECK(enumerate_dominant(preset_trivial(), 3).size() == 1);
}

TEST_CASE("enumerate_dominant nests with growing radius") {
    const TheorySpec t = preset_jordan(2);
    for (int64_t r = 0; r < 4; ++r) {
        const auto small = enumerate_dominant(t, r);
        const auto large = enumerate_dominant(t, r + 1);
        for (const auto& cw : small)
            CHECK(std::find(large.begin(), large.end(), cw) != large.end());
    }
}

TEST_CASE("kappa_node_coweight") {
    // Slots 1 and 3 (1-based) on node 0, slot 2 on node 1.
    FlavorCoweight k{{5, 4, 2}, {0, 1, 0}};
    CHECK(kappa_node_coweight(k, 0) == std::vector<int64_t>{3});
    CHECK(kappa_node_coweight(k, 1) == std::vector<int64_t>{});

    FlavorCoweight flat = FlavorCoweight::single_node({1, 1});
    CHECK(kappa_node_coweight(flat, 0) == std::vector<int64_t>{0});

    FlavorCoweight bad = FlavorCoweight::single_node({1, 2});
    CHECK_THROWS_AS(kappa_node_coweight(bad, 0), StructuralError);
}

TEST_CASE("kappa_node_coweight ignores simultaneous shifts") {
    FlavorCoweight k{{5, 4, 2, 2}, {0, 1, 0, 1}};
    FlavorCoweight shifted = k;
    for (auto& v : shifted.entries) v += 7;
    for (int node : {0, 1})
        CHECK(kappa_node_coweight(k, node) == kappa_node_coweight(shifted, node));
}

TEST_CASE("decompose_lambda_plus_plus peels layers") {
    const auto layers = decompose_lambda_plus_plus(FlavorCoweight::single_node({2, 1, 1, 0}));
    REQUIRE(layers.size() == 2);
    CHECK(layers[0].entries == std::vector<int64_t>{1, 1, 1, 0});
    CHECK(layers[1].entries == std::vector<int64_t>{1, 0, 0, 0});

    CHECK(decompose_lambda_plus_plus(FlavorCoweight::single_node({1, 1})).size() == 1);
    CHECK(decompose_lambda_plus_plus(FlavorCoweight::single_node({0, 0, 0})).empty());

    CHECK_THROWS_AS(decompose_lambda_plus_plus(FlavorCoweight::single_node({1, 2})),
                    StructuralError);
    CHECK_THROWS_AS(decompose_lambda_plus_plus(FlavorCoweight::single_node({1, -1})),
                    StructuralError);
}

TEST_CASE("layers are 0/1, weakly decreasing, and sum back") {
    for (const auto& entries : std::vector<std::vector<int64_t>>{
             {3, 2, 2, 1, 0}, {4}, {2, 2}, {5, 3, 0, 0}}) {
        const FlavorCoweight k = FlavorCoweight::single_node(entries);
        std::vector<int64_t> sum(entries.size(), 0);
        for (const auto& layer : decompose_lambda_plus_plus(k)) {
            for (size_t s = 0; s < layer.entries.size(); ++s) {
                CHECK((layer.entries[s] == 0 || layer.entries[s] == 1));
                if (s) CHECK(layer.entries[s - 1] >= layer.entries[s]);
                sum[s] += layer.entries[s];
            }
        }
        CHECK(sum == entries);
    }
}

TEST_CASE("theory json round trip and validation") {
    for (const auto& t : {preset_sqed(3), preset_jordan(2), preset_two_node(2, 1)}) {
        const TheorySpec back = theory_from_json(theory_to_json(t));
        CHECK(back.group == t.group);
        CHECK(back.flavor_rank == t.flavor_rank);
        CHECK(back.matter == t.matter);
    }
    TheorySpec broken = preset_sqed(2);
    broken.matter[0].flavor.pop_back();
    CHECK_THROWS_AS(broken.validate(), StructuralError);
}
