#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "o1t/connectivity.hpp"

using namespace o1t;

namespace {

SimpleGraph complete_graph(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    g.finish();
    return g;
}

SimpleGraph cycle_graph(int n) {
    SimpleGraph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    g.finish();
    return g;
}

// Exhaustive vertex-connectivity oracle for small graphs.
int kappa_brute(const SimpleGraph& g) {
    const int n = g.n;
    bool complete = true;
    for (int u = 0; u < n && complete; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) {
                complete = false;
                break;
            }
    if (complete) return n - 1;
    for (int k = 1; k < n; ++k) {
        std::vector<int> subset(k);
        std::function<bool(int, int)> rec = [&](int pos, int start) {
            if (pos == k) {
                std::vector<char> removed(n, 0);
                for (int v : subset) removed[v] = 1;
                return g.components(removed).size() > 1;
            }
            for (int v = start; v < n; ++v) {
                subset[pos] = v;
                if (rec(pos + 1, v + 1)) return true;
            }
            return false;
        };
        if (rec(0, 0)) return k;
    }
    return n - 1;
}

} // namespace

TEST_CASE("vertex connectivity on reference graphs") {
    REQUIRE(vertex_connectivity(complete_graph(5)) == 4);
    REQUIRE(vertex_connectivity(cycle_graph(6)) == 2);

    SimpleGraph path(4);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    path.finish();
    REQUIRE(vertex_connectivity(path) == 1);
}

TEST_CASE("max-flow connectivity matches brute force on random graphs") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 6);
        SimpleGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 100 < 55) g.add_edge(u, v);
        g.finish();
        if (!g.is_connected()) continue;
        CAPTURE(trial, n);
        REQUIRE(vertex_connectivity(g) == kappa_brute(g));
    }
}

TEST_CASE("grid-based instances hit every connectivity class") {
    // kappa = 6 via the 3-row grid family
    const auto g6 = build_o1t(build_qprq(4, 0, 3));
    REQUIRE(vertex_connectivity(g6.graph()) == 6);

    // kappa = 8 away from the 3-row family
    const auto g8 = build_o1t(build_qprq(4, 0, 4));
    REQUIRE(vertex_connectivity(g8.graph()) == 8);

    for (const auto* g : {&g6, &g8}) {
        const auto v = classify_connectivity(*g);
        REQUIRE(v.kappa_computed == v.kappa_predicted);
    }
}

TEST_CASE("witness finders") {
    const auto g8 = build_o1t(build_qprq(4, 0, 4));
    const auto labels8 = HomologyLabels::compute(g8.quad_map());
    REQUIRE_FALSE(find_nonfacial_trivial_4cycle(g8, labels8).has_value());
    REQUIRE_FALSE(find_homotopic_3cycle_pair(g8, labels8).has_value());

    const auto g6 = build_o1t(build_qprq(4, 0, 3));
    const auto labels6 = HomologyLabels::compute(g6.quad_map());
    // q=3 columns are essential 3-cycles, not a kappa<=5 witness
    REQUIRE_FALSE(find_nonfacial_trivial_4cycle(g6, labels6).has_value());
    REQUIRE_FALSE(find_homotopic_3cycle_pair(g6, labels6).has_value());
    REQUIRE(as_qpr3(g6.quad()).has_value());
}

TEST_CASE("cut enumeration and minimality") {
    const auto g = build_o1t(build_qprq(4, 0, 3));
    const auto cuts = enumerate_cuts(g.graph(), 6, true, 1u << 24);
    REQUIRE_FALSE(cuts.empty());
    for (const auto& cut : cuts) {
        REQUIRE(cut.S.size() == 6);
        REQUIRE(is_cut(g.graph(), cut.S));
        REQUIRE(is_minimal_cut(g.graph(), cut.S));
    }
    // no cut smaller than kappa
    REQUIRE(enumerate_cuts(g.graph(), 5, false, 1u << 24).empty());
}

namespace {

// Replace one face (a,b,c,d) of a quadrangulation with a cube patch: an
// inner square joined corner to corner. The old face boundary becomes a
// nonfacial trivial 4-cycle, forcing kappa = 4.
Quadrangulation cube_patch(const Quadrangulation& base) {
    const auto faces = trace_faces(base.map);
    const int n = base.map.vertex_count();
    for (size_t fi = 0; fi < faces.size(); ++fi) {
        std::vector<std::vector<int>> fb;
        for (size_t k = 0; k < faces.size(); ++k) {
            if (k == fi) continue;
            const auto vs = faces[k].vertices(base.map);
            fb.push_back({vs.begin(), vs.end()});
        }
        const auto vs = faces[fi].vertices(base.map);
        const int A = n, B = n + 1, C = n + 2, D = n + 3;
        fb.push_back({vs[0], vs[1], B, A});
        fb.push_back({vs[1], vs[2], C, B});
        fb.push_back({vs[2], vs[3], D, C});
        fb.push_back({vs[3], vs[0], A, D});
        fb.push_back({A, B, C, D});
        try {
            Quadrangulation patched;
            patched.map = EmbeddedMap::from_faces(n + 4, fb);
            (void)build_o1t(Quadrangulation{patched});  // polyhedrality check
            return patched;
        } catch (const Error&) {
            // this face placement collides; try the next one
        }
    }
    throw Error("Degenerate", "no face of the base admits a polyhedral cube patch");
}

// Two 3-cycles through a shared vertex x bounding an annulus (filled with two
// middle 3-cycle rings) on one side and a disk (hexagonal ring plus a hub) on
// the other. The touching homotopic pair forces kappa = 5.
Quadrangulation touching_wedge() {
    enum { x, y1, z1, y2, z2, c0, c1, c2, e0, e1, e2, i0, i1, i2, i3, i4, i5, j, N };
    const int w[6] = {x, z1, y1, x, z2, y2};
    const int in[6] = {i0, i1, i2, i3, i4, i5};
    std::vector<std::vector<int>> fb = {
        {x, y1, c1, c0}, {y1, z1, c2, c1}, {z1, x, c0, c2},
        {c0, c1, e1, e0}, {c1, c2, e2, e1}, {c2, c0, e0, e2},
        {e0, e1, z2, x}, {e1, e2, y2, z2}, {e2, e0, x, y2},
    };
    for (int k = 0; k < 6; ++k)
        fb.push_back({w[k], w[(k + 1) % 6], in[(k + 1) % 6], in[k]});
    fb.push_back({i0, i1, i2, j});
    fb.push_back({i2, i3, i4, j});
    fb.push_back({i4, i5, i0, j});
    Quadrangulation qd;
    qd.map = EmbeddedMap::from_faces(N, fb);
    return qd;
}

}  // namespace

TEST_CASE("low connectivity constructions") {
    SECTION("cube patch gives kappa 4") {
        for (auto [p, r, q] : {std::array{4, 0, 4}, {4, 0, 3}, {3, 1, 4}}) {
            const auto g = build_o1t(cube_patch(build_qprq(p, r, q)));
            REQUIRE(vertex_connectivity(g.graph()) == 4);
            const auto v = classify_connectivity(g);
            REQUIRE(v.kappa_predicted == 4);
            REQUIRE(v.kappa_computed == 4);
            REQUIRE(v.nonfacial_trivial_4cycle.has_value());
        }
    }
    SECTION("touching wedge gives kappa 5") {
        const auto g = build_o1t(touching_wedge());
        REQUIRE(g.order() == 18);
        REQUIRE(vertex_connectivity(g.graph()) == 5);
        const auto v = classify_connectivity(g);
        REQUIRE(v.kappa_predicted == 5);
        REQUIRE(v.kappa_computed == 5);
        REQUIRE(v.homotopic_3cycle_pair.has_value());
        // no trivial 4-cycle: the kappa = 4 branch must not fire first
        REQUIRE_FALSE(v.nonfacial_trivial_4cycle.has_value());
    }
}
