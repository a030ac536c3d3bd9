#pragma once

#include <array>
#include <functional>
#include <optional>
#include <queue>
#include <vector>

#include "o1t/topology.hpp"

namespace o1t {

namespace detail {

// Unit-capacity max-flow on the vertex-split network (v_in -> v_out of
// capacity 1, edges of capacity n), BFS augmenting paths.
class VertexFlow {
public:
    explicit VertexFlow(const SimpleGraph& g) : g_(g) {
        const int n = g.n;
        node_count_ = 2 * n;
        head_.assign(node_count_, -1);
        for (int v = 0; v < n; ++v) add_arc(in(v), out(v), 1);
        for (const auto& [u, v] : g.edges) {
            add_arc(out(u), in(v), g.n);
            add_arc(out(v), in(u), g.n);
        }
    }

    int in(int v) const { return 2 * v; }
    int out(int v) const { return 2 * v + 1; }

    // Max s-t flow; s and t are uncapacitated.
    int max_flow(int s, int t, int stop_at) {
        cap_ = base_cap_; // paths run out(s) .. in(t), so terminal splits stay untouched
        int flow = 0;
        while (flow < stop_at && augment(out(s), in(t))) ++flow;
        return flow;
    }

private:
    void add_arc(int a, int b, int c) {
        to_.push_back(b);
        next_.push_back(head_[a]);
        head_[a] = static_cast<int>(to_.size()) - 1;
        base_cap_.push_back(c);
        to_.push_back(a);
        next_.push_back(head_[b]);
        head_[b] = static_cast<int>(to_.size()) - 1;
        base_cap_.push_back(0);
        cap_ = base_cap_;
    }

    bool augment(int s, int t) {
        std::vector<int> pred_arc(node_count_, -1);
        std::queue<int> q;
        q.push(s);
        pred_arc[s] = -2;
        while (!q.empty() && pred_arc[t] == -1) {
            const int v = q.front();
            q.pop();
            for (int a = head_[v]; a >= 0; a = next_[a])
                if (cap_[a] > 0 && pred_arc[to_[a]] == -1) {
                    pred_arc[to_[a]] = a;
                    q.push(to_[a]);
                }
        }
        if (pred_arc[t] == -1) return false;
        for (int v = t; v != s;) {
            const int a = pred_arc[v];
            --cap_[a];
            ++cap_[a ^ 1];
            v = to_[a ^ 1];
        }
        return true;
    }

    const SimpleGraph& g_;
    int node_count_ = 0;
    std::vector<int> head_, to_, next_, base_cap_, cap_;
};

} // namespace detail

// Exact vertex connectivity. Fix a minimum-degree vertex v0; the minimum
// over flows from v0 and each of its neighbors to all their non-neighbors
// covers every minimum cut (some endpoint of the cut's two sides avoids
// v0's closed neighborhood).
inline int vertex_connectivity(const SimpleGraph& g) {
    if (g.n < 2) throw Degenerate("connectivity needs at least 2 vertices");
    if (!g.is_connected()) throw Disconnected("connectivity of a disconnected graph");
    int v0 = 0;
    for (int v = 1; v < g.n; ++v)
        if (g.adj[v].size() < g.adj[v0].size()) v0 = v;
    int best = static_cast<int>(g.adj[v0].size());
    detail::VertexFlow flow(g);
    std::vector<int> sources{v0};
    sources.insert(sources.end(), g.adj[v0].begin(), g.adj[v0].end());
    for (int s : sources)
        for (int t = 0; t < g.n; ++t) {
            if (t == s || g.adjacent(s, t)) continue;
            best = std::min(best, flow.max_flow(s, t, best));
        }
    // Complete graphs have no non-adjacent pair; then kappa = n - 1 =
    // deg(v0), already in best.
    return best;
}

// Witness for one cut: S, the component structure of G - S, a minimality
// flag, and summary numbers for the induced Q[S] regions (filled by the
// analysis layer when an embedding is available).
struct CutWitness {
    std::vector<int> S;
    int component_count = 0;
    int odd_component_count = 0;
    bool minimal = false;
};

inline bool is_cut(const SimpleGraph& g, const std::vector<int>& s) {
    std::vector<char> removed(g.n, 0);
    for (int v : s) removed[v] = 1;
    return g.components(removed).size() >= 2;
}

// A cut is minimal when no proper subset is a cut (cut-ness is not
// monotone, so all proper subsets are checked).
inline bool is_minimal_cut(const SimpleGraph& g, const std::vector<int>& s) {
    if (!is_cut(g, s)) return false;
    const int k = static_cast<int>(s.size());
    for (int mask = 1; mask + 1 < (1 << k); ++mask) {
        std::vector<int> sub;
        for (int i = 0; i < k; ++i)
            if (mask & (1 << i)) sub.push_back(s[i]);
        if (is_cut(g, sub)) return false;
    }
    return true;
}

// All (minimal) cuts of exactly the given size, by subset enumeration.
inline std::vector<CutWitness> enumerate_cuts(const SimpleGraph& g, int size, bool minimal_only,
                                              long long budget = 40'000'000) {
    if (size >= g.n || size < 1) return {};
    long long combos = 1;
    for (int i = 0; i < size; ++i) combos = combos * (g.n - i) / (i + 1);
    if (combos > budget)
        throw TooLarge("C(" + std::to_string(g.n) + "," + std::to_string(size) + ") over budget");

    std::vector<CutWitness> out;
    std::vector<int> s(size);
    std::vector<char> removed(g.n, 0);
    const std::function<void(int, int)> rec = [&](int idx, int from) {
        if (idx == size) {
            const auto comps = g.components(removed);
            if (comps.size() < 2) return;
            CutWitness w;
            w.S = s;
            w.component_count = static_cast<int>(comps.size());
            for (const auto& c : comps)
                if (c.size() % 2) ++w.odd_component_count;
            w.minimal = is_minimal_cut(g, s);
            if (!minimal_only || w.minimal) out.push_back(std::move(w));
            return;
        }
        for (int v = from; v < g.n; ++v) {
            s[idx] = v;
            removed[v] = 1;
            rec(idx + 1, v + 1);
            removed[v] = 0;
        }
    };
    rec(0, 0);
    return out;
}

// A 4-cycle of Q(G) with class (0,0) that is not a facial walk.
inline std::optional<std::vector<int>> find_nonfacial_trivial_4cycle(const OptimalOneEmbedding& g,
                                                                     const HomologyLabels& labels) {
    const EmbeddedMap& q = g.quad_map();
    // Canonical cyclic form (smallest vertex first, smaller neighbor next)
    // of every facial walk; a 4-cycle on a face's vertex set in a different
    // cyclic order is still nonfacial.
    const auto canonical4 = [](std::vector<int> c) {
        const int k = 4;
        const int shift = static_cast<int>(std::min_element(c.begin(), c.end()) - c.begin());
        std::array<int, 4> fwd{}, rev{};
        for (int i = 0; i < k; ++i) {
            fwd[i] = c[(shift + i) % k];
            rev[i] = c[(shift + k - i) % k];
        }
        return std::min(fwd, rev);
    };
    std::set<std::array<int, 4>> facial;
    for (const auto& f : trace_faces(q)) facial.insert(canonical4(f.vertices(q)));
    for (const auto& c : enumerate_simple_cycles(map_as_graph(q), 4)) {
        if (c.size() != 4 || facial.count(canonical4(c))) continue;
        if (labels.walk_class(q, c).is_zero()) return c;
    }
    return std::nullopt;
}

// Two 3-cycles x y1 z1 and x y2 z2 of Q(G), freely homotopic, sharing
// exactly the vertex x (five distinct vertices).
inline std::optional<std::array<int, 5>> find_homotopic_3cycle_pair(const OptimalOneEmbedding& g,
                                                                    const HomologyLabels& labels) {
    const EmbeddedMap& q = g.quad_map();
    auto tris = enumerate_simple_cycles(map_as_graph(q), 3);
    for (size_t i = 0; i < tris.size(); ++i)
        for (size_t j = i + 1; j < tris.size(); ++j) {
            std::vector<int> shared;
            for (int v : tris[i])
                for (int w : tris[j])
                    if (v == w) shared.push_back(v);
            if (shared.size() != 1) continue;
            if (!labels.freely_homotopic(q, tris[i], tris[j])) continue;
            const int x = shared.front();
            std::array<int, 5> out{x, 0, 0, 0, 0};
            int pos = 1;
            for (int v : tris[i])
                if (v != x) out[pos++] = v;
            for (int v : tris[j])
                if (v != x) out[pos++] = v;
            return out;
        }
    return std::nullopt;
}

struct ConnectivityVerdict {
    int kappa_computed = 0;
    int kappa_predicted = 0;
    // Structural witness, present when kappa_predicted is 4, 5 or 6.
    std::optional<std::vector<int>> nonfacial_trivial_4cycle;
    std::optional<std::array<int, 5>> homotopic_3cycle_pair;
    std::optional<std::pair<int, int>> qpr3_params;
};

// The structural connectivity classifier: kappa = 4 on a nonfacial trivial
// 4-cycle; else 5 on a homotopic 3-cycle pair; else, for 8-regular G, 6
// exactly when Q(G) is a Q(p,r,3) with p >= 4; else 6. The computed kappa
// must agree or the instance is a disproof-grade event.
inline ConnectivityVerdict classify_connectivity(const OptimalOneEmbedding& g) {
    const auto labels = HomologyLabels::compute(g.quad_map());
    ConnectivityVerdict v;
    v.kappa_computed = vertex_connectivity(g.graph());
    if ((v.nonfacial_trivial_4cycle = find_nonfacial_trivial_4cycle(g, labels))) {
        v.kappa_predicted = 4;
    } else if ((v.homotopic_3cycle_pair = find_homotopic_3cycle_pair(g, labels))) {
        v.kappa_predicted = 5;
    } else if (g.is_eight_regular()) {
        v.qpr3_params = as_qpr3(g.quad());
        v.kappa_predicted = v.qpr3_params ? 6 : 8;
    } else {
        v.kappa_predicted = 6;
    }
    if (v.kappa_computed != v.kappa_predicted)
        throw TheoremViolation("connectivity classifier predicted " +
                               std::to_string(v.kappa_predicted) + " but computed " +
                               std::to_string(v.kappa_computed));
    return v;
}

} // namespace o1t
