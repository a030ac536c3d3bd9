#pragma once

#include <array>
#include <set>
#include <vector>

#include "o1t/graph.hpp"
#include "o1t/quadrangulation.hpp"

namespace o1t {

// Optimal 1-embedded graph on the torus: a toroidal quadrangulation plus
// both diagonals of every face as a crossing pair. Crossing edges are
// flagged records attached to their face of origin and never enter the
// rotation system; all topology runs on the quadrangular subgraph.
class OptimalOneEmbedding {
public:
    OptimalOneEmbedding(Quadrangulation qd, std::vector<std::array<int, 4>> crossing_faces,
                        SimpleGraph graph)
        : quad_(std::move(qd)), crossing_faces_(std::move(crossing_faces)),
          graph_(std::move(graph)) {}

    const Quadrangulation& quad() const { return quad_; }
    const EmbeddedMap& quad_map() const { return quad_.map; }
    // Per face f = v0 v1 v2 v3: diagonals {v0,v2} and {v1,v3} cross inside f.
    const std::vector<std::array<int, 4>>& crossing_faces() const { return crossing_faces_; }
    const SimpleGraph& graph() const { return graph_; }
    int order() const { return graph_.n; }

    bool is_eight_regular() const {
        for (const auto& a : graph_.adj)
            if (static_cast<int>(a.size()) != 8) return false;
        return true;
    }

private:
    Quadrangulation quad_;
    std::vector<std::array<int, 4>> crossing_faces_;
    SimpleGraph graph_;
};

// Adds both diagonals of every face. DiagonalCollision signals that the
// input quadrangulation is not polyhedral (a diagonal repeats a quad edge
// or a diagonal of another face); such instances are rejected from corpora.
inline OptimalOneEmbedding build_o1t(Quadrangulation qd) {
    const auto verdict = check_quadrangulation(qd.map);
    if (!verdict.ok) throw NotQuadrangulation(verdict.reason);
    const EmbeddedMap& m = qd.map;
    const int n = m.vertex_count();

    std::set<std::pair<int, int>> present;
    for (const auto& e : m.edges()) present.insert(e);

    SimpleGraph g = SimpleGraph::with_vertices(n);
    for (const auto& [u, v] : m.edges()) g.add_edge(u, v);

    std::vector<std::array<int, 4>> crossing;
    for (const auto& f : trace_faces(m)) {
        const auto vs = f.vertices(m);
        crossing.push_back({vs[0], vs[1], vs[2], vs[3]});
        for (const auto& [x, y] : {std::pair{vs[0], vs[2]}, std::pair{vs[1], vs[3]}}) {
            if (x == y)
                throw DiagonalCollision("degenerate diagonal at vertex " + std::to_string(x));
            const auto key = std::minmax(x, y);
            if (!present.insert({key.first, key.second}).second)
                throw DiagonalCollision("diagonal " + std::to_string(key.first) + "-" +
                                        std::to_string(key.second) + " already present");
            g.add_edge(x, y);
        }
    }
    g.finish();

    if (static_cast<int>(g.edges.size()) != 4 * n)
        throw InternalInvariant("optimal edge count violated");
    for (int v = 0; v < n; ++v) {
        if (g.adj[v].size() % 2 != 0)
            throw InternalInvariant("odd degree in O1TG at vertex " + std::to_string(v));
        if (static_cast<int>(g.adj[v].size()) != 2 * m.degree(v))
            throw InternalInvariant("deg_G != 2 deg_Q at vertex " + std::to_string(v));
    }
    return OptimalOneEmbedding(std::move(qd), std::move(crossing), std::move(g));
}

// The quadrangular subgraph Q(G): all non-crossing edges.
inline const Quadrangulation& quadrangular_subgraph(const OptimalOneEmbedding& g) {
    return g.quad();
}

// Subgraph of Q(G) induced by s, carrying the inherited rotation (cyclic
// order restricted to surviving neighbors). May be disconnected or have
// isolated vertices; returned as plain rotation lists keyed by the
// original vertex ids.
inline Rotation induced_quad_rotation(const EmbeddedMap& q, const std::vector<char>& in_s) {
    Rotation rot(q.vertex_count());
    for (int v = 0; v < q.vertex_count(); ++v) {
        if (!in_s[v]) continue;
        for (int d : q.darts_at(v))
            if (in_s[q.target(d)]) rot[v].push_back(q.target(d));
    }
    return rot;
}

} // namespace o1t
