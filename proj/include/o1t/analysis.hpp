#pragma once

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "o1t/connectivity.hpp"
#include "o1t/io.hpp"
#include "o1t/matching.hpp"

namespace o1t {

using Json = nlohmann::ordered_json;

inline Json matching_to_json(const Matching& m) {
    Json j = Json::array();
    for (const auto& [a, b] : m) j.push_back({a, b});
    return j;
}

// Full per-instance record: counts, computed vs predicted connectivity and
// extendability with witnesses, barrier-cycle inventory, lemma flags.
// Schema "o1t-report/1"; every comparison-relevant field is deterministic
// given the instance bytes (timing lives in a separate key).
inline Json analyze_instance(const OptimalOneEmbedding& g, const std::string& id,
                             int blocking_search_max_n = 20) {
    const auto t0 = std::chrono::steady_clock::now();
    const EmbeddedMap& q = g.quad_map();

    Json rep;
    rep["schema"] = "o1t-report/1";
    rep["instance"] = {{"id", id}, {"provenance", g.quad().provenance}};
    rep["counts"] = {{"vertices", g.order()},
                     {"edges", g.graph().edges.size()},
                     {"quad_edges", q.edge_count()},
                     {"quad_faces", trace_faces(q).size()}};
    rep["eight_regular"] = g.is_eight_regular();

    bool violation = false;
    std::string violation_message;

    Json conn;
    try {
        const auto v = classify_connectivity(g);
        conn["kappa_computed"] = v.kappa_computed;
        conn["kappa_predicted"] = v.kappa_predicted;
        conn["agree"] = true;
        if (v.nonfacial_trivial_4cycle)
            conn["witness"] = {{"kind", "nonfacial_trivial_4cycle"},
                               {"cycle", *v.nonfacial_trivial_4cycle}};
        else if (v.homotopic_3cycle_pair)
            conn["witness"] = {{"kind", "homotopic_3cycle_pair"},
                               {"vertices", *v.homotopic_3cycle_pair}};
        else if (v.qpr3_params)
            conn["witness"] = {{"kind", "qpr3"},
                               {"p", v.qpr3_params->first},
                               {"r", v.qpr3_params->second}};
    } catch (const TheoremViolation& e) {
        conn["agree"] = false;
        conn["error"] = e.what();
        violation = true;
        violation_message = e.what();
    }
    rep["connectivity"] = conn;

    const auto labels = HomologyLabels::compute(q);
    Json barriers = Json::array();
    for (const auto& b : barrier_cycles(g, 4, labels))
        barriers.push_back({{"cycle", b.cycle}, {"interior_vertices", b.interior_vertices}});
    rep["barrier_4cycles"] = barriers;

    if (g.order() % 2 == 0) {
        Json ext = Json::array();
        try {
            for (const auto& v : classify_extendability(g, blocking_search_max_n)) {
                Json jv = {{"m", v.m},
                           {"computed", v.extendable_computed},
                           {"predicted", v.predicted_known ? Json(v.extendable_predicted)
                                                           : Json(nullptr)}};
                if (v.witness) jv["witness"] = matching_to_json(*v.witness);
                ext.push_back(std::move(jv));
            }
        } catch (const TheoremViolation& e) {
            violation = true;
            violation_message = e.what();
            ext.push_back({{"error", e.what()}});
        }
        rep["extendability"] = ext;
    } else {
        rep["extendability"] = {{"skipped", "odd order"}};
    }

    rep["theorem_violation"] = violation;
    if (violation) rep["theorem_violation_message"] = violation_message;
    rep["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    return rep;
}

// --- lemma property suites -------------------------------------------------

struct LemmaCheckResult {
    long long cuts_checked = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

// For every minimal cut of size 4..max_cut: region parity, one component
// per region, Q[S] minimum degree, and the 8-regular 6/7-cut structure.
inline LemmaCheckResult check_cut_lemmas(const OptimalOneEmbedding& g, int max_cut = 7,
                                         const std::string& id = "") {
    LemmaCheckResult res;
    const EmbeddedMap& q = g.quad_map();
    const SimpleGraph& graph = g.graph();
    const auto labels = HomologyLabels::compute(q);
    const bool regular8 = g.is_eight_regular();
    const auto faces = trace_faces(q);
    const auto face_of = face_of_dart(q, faces);
    const auto fail = [&](const std::string& what) { res.failures.push_back(id + ": " + what); };

    for (int size = 4; size <= max_cut; ++size) {
        for (const auto& cut : enumerate_cuts(graph, size, /*minimal_only=*/true)) {
            ++res.cuts_checked;
            const auto mask = SubgraphMask::from_vertex_set(q, cut.S);
            const auto dec = decompose_regions(q, mask);

            // lm:parity — every face of Q[S] has even size.
            for (const auto& r : dec.regions)
                if (r.boundary_length % 2 != 0)
                    fail("parity: odd region size " + std::to_string(r.boundary_length));

            // lm:sep — each region holds at most one component of G - S.
            std::vector<char> removed(graph.n, 0);
            for (int v : cut.S) removed[v] = 1;
            std::vector<int> comps_in_region(dec.regions.size(), 0);
            for (const auto& comp : graph.components(removed)) {
                std::set<int> regions_hit;
                for (int v : comp)
                    regions_hit.insert(dec.region_of_face[face_of[q.darts_at(v).front()]]);
                if (regions_hit.size() != 1)
                    fail("sep: component spans several regions");
                else
                    ++comps_in_region[*regions_hit.begin()];
            }
            for (int c : comps_in_region)
                if (c > 1) fail("sep: region holds " + std::to_string(c) + " components");

            // lm:degree — minimal cuts induce Q[S] with min degree >= 2.
            const auto induced = induced_quad_rotation(q, mask.vertex_in_k);
            for (int v : cut.S)
                if (static_cast<int>(induced[v].size()) < 2)
                    fail("degree: vertex " + std::to_string(v) + " has Q[S]-degree " +
                         std::to_string(induced[v].size()));

            if (regular8 && size == 7) fail("min7cut: minimal 7-cut exists");

            if (regular8 && size == 6) {
                // lm:6cut3 — Q[S] is two disjoint homotopic essential 3-cycles.
                bool structure_ok = mask.edge_count() == 6;
                std::vector<std::vector<int>> tris;
                if (structure_ok) {
                    SimpleGraph sub = SimpleGraph::with_vertices(graph.n);
                    for (int d = 0; d < q.dart_count(); ++d)
                        if (mask.dart_in_k[d] && d < q.opposite(d))
                            sub.add_edge(q.origin(d), q.target(d));
                    sub.finish();
                    tris = enumerate_simple_cycles(sub, 3);
                    structure_ok = tris.size() == 2;
                    if (structure_ok) {
                        std::set<int> all(tris[0].begin(), tris[0].end());
                        for (int v : tris[1]) structure_ok &= all.insert(v).second;
                        structure_ok = structure_ok && all.size() == 6;
                    }
                    if (structure_ok)
                        structure_ok = !labels.walk_class(q, tris[0]).is_zero() &&
                                       !labels.walk_class(q, tris[1]).is_zero() &&
                                       labels.freely_homotopic(q, tris[0], tris[1]);
                }
                if (!structure_ok) fail("6cut3: 6-cut without the two-3-cycle structure");
            }

            if (regular8 && (size == 6 || size == 7)) {
                // lm:6cut2 — at least two non-2-cell regions.
                int non_cells = 0;
                for (const auto& r : dec.regions)
                    if (!r.two_cell) ++non_cells;
                if (non_cells < 2) fail("6cut2: fewer than two non-2-cell regions");
            }

            if (size == 5) {
                // lm:5conn — a 6-face covering S and holding a component.
                bool found = false;
                for (size_t ri = 0; ri < dec.regions.size(); ++ri) {
                    const auto& r = dec.regions[ri];
                    if (r.boundary_length != 6) continue;
                    std::set<int> boundary_vertices;
                    for (const auto& w : r.boundary_walks)
                        for (int d : w) boundary_vertices.insert(q.origin(d));
                    if (boundary_vertices != std::set<int>(cut.S.begin(), cut.S.end())) continue;
                    if (r.interior_vertices > 0) found = true;
                }
                if (!found) fail("5conn: minimal 5-cut without the covering 6-face");
            }

            // Conservation invariants of the decomposition itself.
            int faces_total = 0, vint_total = 0, blen_total = 0;
            for (const auto& r : dec.regions) {
                faces_total += static_cast<int>(r.faces.size());
                vint_total += r.interior_vertices;
                blen_total += r.boundary_length;
            }
            if (faces_total != static_cast<int>(faces.size()))
                fail("regions: face conservation");
            if (vint_total != q.vertex_count() - mask.vertex_count())
                fail("regions: interior vertex conservation");
            if (blen_total != 2 * mask.edge_count()) fail("regions: boundary length conservation");
        }
    }
    return res;
}

// Blocker-driven checks: Lemma lem:blocker existence, lm:edge-bound and
// lem:oddcompo for every non-extendable matching witness the brute-force
// pass produces.
inline LemmaCheckResult check_blocker_lemmas(const OptimalOneEmbedding& g,
                                             const std::string& id = "") {
    LemmaCheckResult res;
    if (g.order() % 2) return res;
    const EmbeddedMap& q = g.quad_map();
    const auto fail = [&](const std::string& what) { res.failures.push_back(id + ": " + what); };

    const int kappa = vertex_connectivity(g.graph());
    for (int mm = 1; mm <= 3; ++mm) {
        if (g.order() < 2 * mm + 2) continue;
        const auto verdict = is_m_extendable(g.graph(), mm);
        if (verdict.extendable_computed) continue;
        const int m = mm - 1; // lemma indexes the matching as m+1 edges
        const auto blocker = find_blocker(g.graph(), *verdict.witness, m);
        if (!blocker) {
            fail("blocker: none found for a non-extendable matching");
            continue;
        }
        ++res.cuts_checked;
        const auto mask = SubgraphMask::from_vertex_set(q, blocker->S);
        const auto dec = decompose_regions(q, mask);
        const int F = static_cast<int>(dec.regions.size());
        const int E = mask.edge_count();
        // lm:edge-bound with chi = 0.
        if (2 * F + 2 * m < E)
            fail("edge-bound: 2F + 2m < E for a blocker set");
        // lem:oddcompo with chi = 0: C_o <= 2m / (q - 2) for 2q-connected G.
        if (kappa >= 6) {
            const int qq = kappa / 2;
            if (qq >= 3 && blocker->odd_component_count * (qq - 2) > 2 * m)
                fail("oddcompo: C_o exceeds 2m/(q-2)");
        }
    }
    return res;
}

// --- batch helpers -----------------------------------------------------------

inline int worker_count(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("O1T_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// Runs fn(i) for i in [0, count) on a bounded pool; results are assembled
// by index so batch output is deterministic.
template <typename Fn>
inline void parallel_for_index(int count, int threads, Fn&& fn) {
    threads = std::max(1, std::min(threads, count));
    if (threads == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

} // namespace o1t
