#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "o1t/topology.hpp"

using namespace o1t;

namespace {

// Independent triviality oracle: a simple cycle C in a torus map is
// null-homotopic iff deleting its darts disconnects the face-adjacency
// graph (a separating cycle on the torus bounds) AND one side is a disk.
// For simple cycles on the torus, separating <=> trivial, so flood fill
// over faces suffices.
bool trivial_by_separation(const EmbeddedMap& m, const std::vector<int>& cycle) {
    const auto mask = SubgraphMask::from_cycle(m, cycle);
    const auto faces = trace_faces(m);
    const auto face_of = face_of_dart(m, faces);
    std::vector<std::vector<int>> fadj(faces.size());
    for (size_t f = 0; f < faces.size(); ++f)
        for (int d : faces[f].darts)
            if (!mask.dart_in_k[d]) fadj[f].push_back(face_of[m.opposite(d)]);
    std::vector<int> comp(faces.size(), -1);
    int ncomp = 0;
    for (size_t s = 0; s < faces.size(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{(int)s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (int g : fadj[f])
                if (comp[g] < 0) comp[g] = ncomp, stack.push_back(g);
        }
        ++ncomp;
    }
    return ncomp > 1;
}

} // namespace

TEST_CASE("facial walks carry the zero class; generators exist") {
    const auto m = build_qprq(4, 0, 4).map;
    const auto labels = HomologyLabels::compute(m);
    for (const auto& f : trace_faces(m)) {
        HomologyClass c{0, 0};
        for (int d : f.darts) c = c + labels.dart_label(d);
        REQUIRE(c.is_zero());
    }
    // the meridian (one grid column) is primitive and nontrivial
    std::vector<int> meridian{0, 1, 2, 3};
    const auto c = labels.cycle_class(m, meridian);
    REQUIRE_FALSE(c.is_zero());
    REQUIRE(c.is_primitive());
    REQUIRE_FALSE(labels.is_trivial_cycle(m, meridian));
}

TEST_CASE("free homotopy equates a class with its reverse") {
    const auto m = build_qprq(4, 0, 4).map;
    const auto labels = HomologyLabels::compute(m);
    std::vector<int> column{0, 1, 2, 3};
    std::vector<int> reversed{3, 2, 1, 0};
    std::vector<int> other_column{4, 5, 6, 7};
    std::vector<int> row{0, 4, 8, 12};
    REQUIRE(labels.freely_homotopic(m, column, reversed));
    REQUIRE(labels.freely_homotopic(m, column, other_column));
    REQUIRE_FALSE(labels.freely_homotopic(m, column, row));
}

TEST_CASE("triviality agrees with the face-separation oracle") {
    for (auto [p, r, q] : {std::array{4, 0, 4}, {3, 1, 5}, {5, 0, 3}, {4, 2, 4}}) {
        CAPTURE(p, r, q);
        const auto m = build_qprq(p, r, q).map;
        const auto labels = HomologyLabels::compute(m);
        int checked = 0;
        for (const auto& cyc : enumerate_simple_cycles(map_as_graph(m), 8)) {
            ++checked;
            REQUIRE(labels.is_trivial_cycle(m, cyc) == trivial_by_separation(m, cyc));
        }
        REQUIRE(checked > 0);
    }
}

TEST_CASE("region decomposition: whole map and a facial cycle") {
    const auto m = build_qprq(4, 0, 4).map;

    SECTION("K = whole map gives one 2-cell region per face") {
        std::vector<int> all(m.vertex_count());
        std::iota(all.begin(), all.end(), 0);
        const auto regions = decompose_regions(m, SubgraphMask::from_vertex_set(m, all)).regions;
        REQUIRE(regions.size() == trace_faces(m).size());
        for (const auto& reg : regions) {
            REQUIRE(reg.two_cell);
            REQUIRE(reg.euler_open == 1);
            REQUIRE(reg.interior_vertices == 0);
            REQUIRE(reg.boundary_walks.size() == 1);
        }
    }

    SECTION("K = one facial 4-cycle leaves the face and its torus complement") {
        const auto faces = trace_faces(m);
        const auto cyc = faces[0].vertices(m);
        const auto regions =
            decompose_regions(m, SubgraphMask::from_cycle(m, std::vector<int>(cyc.begin(), cyc.end()))).regions;
        REQUIRE(regions.size() == 2);
        int disks = 0, others = 0;
        for (const auto& reg : regions) {
            if (reg.two_cell) {
                ++disks;
                REQUIRE(reg.faces.size() == 1);
            } else {
                ++others;
                REQUIRE(reg.euler_open == -1); // torus minus an open disk
            }
        }
        REQUIRE(disks == 1);
        REQUIRE(others == 1);
    }
}

TEST_CASE("disk_interior picks the unique disk side") {
    const auto m = build_qprq(4, 0, 4).map;
    const auto labels = HomologyLabels::compute(m);
    const auto faces = trace_faces(m);
    const auto cyc4 = faces[0].vertices(m);
    std::vector<int> cyc(cyc4.begin(), cyc4.end());
    REQUIRE(labels.is_trivial_cycle(m, cyc));
    const auto [interior, region] = disk_interior(m, cyc);
    REQUIRE(interior == 0);
    REQUIRE(region >= 0);

    std::vector<int> meridian{0, 1, 2, 3};
    REQUIRE_THROWS_AS(disk_interior(m, meridian), NoDiskSide);
}

TEST_CASE("simple cycle enumeration finds all 4-cycles of the 4x4 grid") {
    const auto m = build_qprq(4, 0, 4).map;
    int len3 = 0, len4 = 0;
    for (const auto& cyc : enumerate_simple_cycles(map_as_graph(m), 4)) {
        if (cyc.size() == 3) ++len3;
        if (cyc.size() == 4) ++len4;
    }
    REQUIRE(len3 == 0); // bipartite
    // 16 facial squares + 4 rows + 4 columns
    REQUIRE(len4 == 24);
}
