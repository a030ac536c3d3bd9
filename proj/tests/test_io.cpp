#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "o1t/io.hpp"

using namespace o1t;

TEST_CASE("rot v1 round trip is byte-identical") {
    const auto qd = build_qprq(3, 1, 5);
    const auto text = write_rot(qd.map);
    const auto reparsed = EmbeddedMap::from_rotation(parse_rot(text));
    REQUIRE(write_rot(reparsed) == text);
    REQUIRE(maps_isomorphic(qd.map, reparsed));
}

TEST_CASE("rot v1 parser diagnostics") {
    REQUIRE_THROWS_AS(parse_rot(""), ParseError);
    REQUIRE_THROWS_AS(parse_rot("n x\n"), ParseError);
    REQUIRE_THROWS_AS(parse_rot("n 3\n0: 1 2\n1: 0 2\n"), ParseError);        // missing line
    REQUIRE_THROWS_AS(parse_rot("n 3\n0: 1 2\n1: 0 2\n5: 0 1\n"), ParseError); // bad id
    REQUIRE_THROWS_AS(parse_rot("n 3\n0: 1 9\n1: 0 2\n2: 0 1\n"), ParseError); // out of range

    // comments and blank lines are tolerated
    const auto rot = parse_rot("# triangle, doubled\nn 3\n\n0: 1 2 1 2\n1: 2 0 2 0\n2: 0 1 0 1\n");
    REQUIRE(rot.size() == 3);
    REQUIRE(EmbeddedMap::from_rotation(rot, true).edge_count() == 6);
}

TEST_CASE("o1t v1 JSON round trip preserves the instance") {
    const auto g = build_o1t(build_qprq(4, 0, 4));
    const auto j = to_o1t_json(g);
    REQUIRE(j.at("format") == "o1t v1");
    const auto g2 = from_o1t_json(j);
    REQUIRE(g2.order() == g.order());
    // rotations agree up to the canonical cyclic start used on disk
    REQUIRE(maps_isomorphic(g2.quad_map(), g.quad_map()));
    REQUIRE(g2.graph().edges == g.graph().edges);
    REQUIRE(to_o1t_json(g2) == j);
    REQUIRE(g2.quad().provenance == g.quad().provenance);
}

TEST_CASE("o1t v1 rejects tampered crossing pairs") {
    const auto g = build_o1t(build_qprq(4, 0, 3));
    auto j = to_o1t_json(g);
    auto& pairs = j.at("crossing_pairs");
    const int tmp = pairs[0][0];
    pairs[0][0] = pairs[0][1];
    pairs[0][1] = tmp;
    REQUIRE_THROWS_AS(from_o1t_json(j), ParseError);
}

TEST_CASE("load_instance sniffs the format") {
    const auto g = build_o1t(build_qprq(3, 0, 5));
    const auto dir = std::string("io_test_scratch");
    std::filesystem::create_directories(dir);
    write_file(dir + "/a.json", to_o1t_json(g).dump());
    write_file(dir + "/a.rot", write_rot(g.quad_map()));
    REQUIRE(load_instance(dir + "/a.json").order() == g.order());
    REQUIRE(load_instance(dir + "/a.rot").order() == g.order());
    REQUIRE_THROWS_AS(load_instance(dir + "/missing.rot"), ParseError);
}
