#include <catch2/catch_amalgamated.hpp>

#include "o1t/quadrangulation.hpp"

using namespace o1t;

TEST_CASE("Q(p,r,q) grid counts and face shapes") {
    for (auto [p, r, q] : {std::array{4, 0, 3}, {3, 1, 5}, {5, 2, 4}, {2, 1, 4}}) {
        CAPTURE(p, r, q);
        const auto qd = build_qprq(p, r, q);
        REQUIRE(qd.map.vertex_count() == p * q);
        REQUIRE(qd.map.edge_count() == 2 * p * q);
        const auto verdict = check_quadrangulation(qd.map);
        REQUIRE(verdict.ok);
        for (int v = 0; v < p * q; ++v) REQUIRE(qd.map.degree(v) == 4);
    }
}

TEST_CASE("degenerate grid parameters are rejected") {
    REQUIRE_THROWS_AS(build_qprq(1, 0, 3), NonSimple);
    REQUIRE_THROWS_AS(build_qprq(3, 0, 2), Degenerate);
    REQUIRE_THROWS_AS(build_qprq(0, 0, 4), Degenerate);
}

TEST_CASE("vertex split grows counts by (1, 2, 1)") {
    auto qd = build_qprq(4, 0, 3);
    const int v = 5;
    const auto rot = qd.map.rotation()[v];
    // a and b must be non-consecutive neighbors in the rotation at v
    const auto grown = vertex_split(qd, v, rot[0], rot[2]);
    REQUIRE(grown.map.vertex_count() == qd.map.vertex_count() + 1);
    REQUIRE(grown.map.edge_count() == qd.map.edge_count() + 2);
    REQUIRE(trace_faces(grown.map).size() == trace_faces(qd.map).size() + 1);
    REQUIRE(check_quadrangulation(grown.map).ok);
    REQUIRE(grown.provenance.contains("moves"));
}

TEST_CASE("vertex split rejects consecutive neighbors") {
    auto qd = build_qprq(4, 0, 3);
    const auto rot = qd.map.rotation()[5];
    REQUIRE_THROWS_AS(vertex_split(qd, 5, rot[0], rot[1]), AdjacentSplitNeighbors);
}

TEST_CASE("map isomorphism: relabeling and mirrors") {
    const auto a = build_qprq(4, 1, 3).map;
    REQUIRE(maps_isomorphic(a, a));

    // relabel vertices by an affine shift; rotation structure is unchanged
    const int n = a.vertex_count();
    const auto& rot = a.rotation();
    Rotation shifted(n);
    for (int v = 0; v < n; ++v)
        for (int u : rot[(v + 5) % n]) shifted[v].push_back((u + n - 5) % n);
    REQUIRE(maps_isomorphic(a, EmbeddedMap::from_rotation(shifted)));

    // the mirror image (reversed rotations) must also be accepted
    Rotation mirror(n);
    for (int v = 0; v < n; ++v) mirror[v].assign(rot[v].rbegin(), rot[v].rend());
    REQUIRE(maps_isomorphic(a, EmbeddedMap::from_rotation(mirror)));

    // same order, different triangle counts, hence non-isomorphic
    REQUIRE_FALSE(maps_isomorphic(build_qprq(4, 0, 3).map, build_qprq(2, 1, 6).map));

    // transposing the grid is an isomorphism when r = 0
    REQUIRE(maps_isomorphic(build_qprq(4, 0, 3).map, build_qprq(3, 0, 4).map));
}

TEST_CASE("as_qpr3 recognizes 3-row grids up to isomorphism") {
    const auto qd = build_qprq(5, 1, 3);
    const auto params = as_qpr3(qd);
    REQUIRE(params.has_value());
    REQUIRE(params->first == 5);

    REQUIRE_FALSE(as_qpr3(build_qprq(4, 0, 4)).has_value());
    REQUIRE_FALSE(as_qpr3(build_qprq(3, 0, 3)).has_value());
}
