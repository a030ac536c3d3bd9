#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "o1t/topology.hpp"

namespace o1t {

using Matching = std::vector<std::pair<int, int>>;

namespace detail {

// Maximum matching in a general graph, augmenting paths with blossom
// contraction. Vertices with removed[v] != 0 are ignored.
class BlossomMatcher {
public:
    BlossomMatcher(const SimpleGraph& g, const std::vector<char>& removed)
        : g_(g), removed_(removed), match_(g.n, -1), parent_(g.n), base_(g.n) {}

    // Mate array; -1 for unmatched or removed vertices.
    std::vector<int> solve() {
        for (int v = 0; v < g_.n; ++v) {
            if (removed_[v] || match_[v] >= 0) continue;
            // Greedy seed edge first; cheap and often enough.
            for (int w : g_.adj[v])
                if (!removed_[w] && match_[w] < 0) {
                    match_[v] = w;
                    match_[w] = v;
                    break;
                }
        }
        for (int v = 0; v < g_.n; ++v)
            if (!removed_[v] && match_[v] < 0) augment_from(v);
        return match_;
    }

private:
    int lowest_common_base(int a, int b) {
        std::vector<char> seen(g_.n, 0);
        for (int v = a;; v = parent_[match_[v]]) {
            v = base_[v];
            seen[v] = 1;
            if (match_[v] < 0) break;
        }
        for (int v = b;; v = parent_[match_[v]]) {
            v = base_[v];
            if (seen[v]) return v;
        }
    }

    void mark_blossom_path(int v, int b, int child, std::vector<char>& in_blossom) {
        while (base_[v] != b) {
            in_blossom[base_[v]] = 1;
            in_blossom[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    void augment_from(int root) {
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int v = 0; v < g_.n; ++v) base_[v] = v;
        std::vector<char> used(g_.n, 0);
        std::vector<int> queue{root};
        used[root] = 1;
        int finish = -1;
        for (size_t qi = 0; qi < queue.size() && finish < 0; ++qi) {
            const int v = queue[qi];
            for (int w : g_.adj[v]) {
                if (removed_[w] || base_[v] == base_[w] || match_[v] == w) continue;
                if (w == root || (match_[w] >= 0 && parent_[match_[w]] >= 0)) {
                    // Odd cycle: contract the blossom.
                    const int b = lowest_common_base(v, w);
                    std::vector<char> in_blossom(g_.n, 0);
                    mark_blossom_path(v, b, w, in_blossom);
                    mark_blossom_path(w, b, v, in_blossom);
                    for (int u = 0; u < g_.n; ++u)
                        if (in_blossom[base_[u]]) {
                            base_[u] = b;
                            if (!used[u]) {
                                used[u] = 1;
                                queue.push_back(u);
                            }
                        }
                } else if (parent_[w] < 0) {
                    parent_[w] = v;
                    if (match_[w] < 0) {
                        finish = w;
                        break;
                    }
                    used[match_[w]] = 1;
                    queue.push_back(match_[w]);
                }
            }
        }
        if (finish < 0) return;
        for (int v = finish; v >= 0;) {
            const int pv = parent_[v], next = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = next;
        }
    }

    const SimpleGraph& g_;
    const std::vector<char>& removed_;
    std::vector<int> match_, parent_, base_;
};

} // namespace detail

inline std::vector<int> max_matching(const SimpleGraph& g,
                                     const std::vector<char>& removed = {}) {
    const std::vector<char> none(g.n, 0);
    detail::BlossomMatcher bm(g, removed.empty() ? none : removed);
    return bm.solve();
}

inline bool has_perfect_matching(const SimpleGraph& g, const std::vector<char>& removed = {}) {
    const std::vector<char> mask = removed.empty() ? std::vector<char>(g.n, 0) : removed;
    int alive = 0;
    for (int v = 0; v < g.n; ++v)
        if (!mask[v]) ++alive;
    if (alive % 2) return false;
    const auto mate = max_matching(g, mask);
    for (int v = 0; v < g.n; ++v)
        if (!mask[v] && mate[v] < 0) return false;
    return true;
}

// Number of odd-order components of G - S.
inline int odd_components(const SimpleGraph& g, const std::vector<int>& s) {
    std::vector<char> removed(g.n, 0);
    for (int v : s) removed[v] = 1;
    int odd = 0;
    for (const auto& c : g.components(removed))
        if (c.size() % 2) ++odd;
    return odd;
}

struct ExtendabilityVerdict {
    int m = 0;
    bool extendable_computed = false;
    bool extendable_predicted = false;
    bool predicted_known = true;     // false when the structural search hit its budget
    std::optional<Matching> witness; // a size-m matching that does not extend
};

// Brute-force m-extendability: every matching of size m must extend to a
// perfect matching. Returns the first failing matching as witness.
inline ExtendabilityVerdict is_m_extendable(const SimpleGraph& g, int m) {
    if (g.n % 2) throw OddOrder("extendability needs even order");
    if (g.n < 2 * m + 2)
        throw OrderTooSmall("m-extendability needs at least 2m+2 vertices");
    ExtendabilityVerdict v;
    v.m = m;
    v.extendable_computed = true;
    const int E = static_cast<int>(g.edges.size());
    std::vector<int> picked;
    std::vector<char> covered(g.n, 0);
    const std::function<bool(int)> rec = [&](int from) {
        if (static_cast<int>(picked.size()) == m) {
            if (has_perfect_matching(g, covered)) return true;
            Matching w;
            for (int e : picked) w.push_back(g.edges[e]);
            v.extendable_computed = false;
            v.witness = std::move(w);
            return false;
        }
        for (int e = from; e < E; ++e) {
            const auto& [a, b] = g.edges[e];
            if (covered[a] || covered[b]) continue;
            covered[a] = covered[b] = 1;
            picked.push_back(e);
            const bool ok = rec(e + 1);
            picked.pop_back();
            covered[a] = covered[b] = 0;
            if (!ok) return false;
        }
        return true;
    };
    rec(0);
    return v;
}

struct BlockerWitness {
    std::vector<int> S;
    Matching matching;
    int odd_component_count = 0;
};

// Tutte-style blocker for a non-extendable matching: the smallest superset
// S of V(M) with |S| <= C_o(G - S) + 2m, by bounded subset search.
// Guaranteed to exist for genuinely non-extendable matchings.
inline std::optional<BlockerWitness> find_blocker(const SimpleGraph& g, const Matching& matching,
                                                  int m, long long budget = 20'000'000) {
    std::vector<int> forced;
    std::vector<char> in_forced(g.n, 0);
    for (const auto& [a, b] : matching) {
        forced.push_back(a);
        forced.push_back(b);
        in_forced[a] = in_forced[b] = 1;
    }
    std::vector<int> rest;
    for (int v = 0; v < g.n; ++v)
        if (!in_forced[v]) rest.push_back(v);

    long long tested = 0;
    std::vector<int> extra;
    std::optional<BlockerWitness> found;
    const std::function<bool(int)> rec = [&](int from) {
        if (++tested > budget) throw BudgetExceeded("blocker search over budget");
        std::vector<int> S = forced;
        S.insert(S.end(), extra.begin(), extra.end());
        const int co = odd_components(g, S);
        if (static_cast<int>(S.size()) <= co + 2 * m) {
            std::sort(S.begin(), S.end());
            found = BlockerWitness{std::move(S), matching, co};
            return true;
        }
        return false;
    };
    // Breadth-first over sizes so the returned S is smallest.
    const std::function<bool(int, int, int)> grow = [&](int remaining, int from, int) {
        if (remaining == 0) return rec(from);
        for (int i = from; i < static_cast<int>(rest.size()); ++i) {
            extra.push_back(rest[i]);
            const bool hit = grow(remaining - 1, i + 1, 0);
            extra.pop_back();
            if (hit) return true;
        }
        return false;
    };
    for (int add = 0; add <= static_cast<int>(rest.size()); ++add)
        if (grow(add, 0, 0)) return found;
    return std::nullopt;
}

// Search for a blocking quadrangulation subgraph H = Q[S]: an induced
// subgraph of Q(G) that is itself a quadrangulation of the torus, every
// face of which is an odd weighted region of G. Bitmask enumeration,
// bounded to maps with at most max_vertices vertices.
inline std::optional<std::vector<int>> find_blocking_quad_subgraph(const OptimalOneEmbedding& g,
                                                                   int max_vertices = 20) {
    const EmbeddedMap& q = g.quad_map();
    const int n = q.vertex_count();
    if (n % 2) throw OddOrder("blocking subgraph search applies to even order");
    if (n > max_vertices)
        throw BudgetExceeded("blocking subgraph search capped at n <= " +
                             std::to_string(max_vertices));

    std::vector<std::uint32_t> adj(n, 0);
    for (const auto& [u, v] : q.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        // A toroidal quadrangulation satisfies |E| = 2|V| and min degree 2;
        // cheap necessary filters before the face validation.
        int edges2 = 0; // twice the induced edge count
        bool deg_ok = true;
        for (std::uint32_t bits = s; bits; bits &= bits - 1) {
            const int v = std::countr_zero(bits);
            const int d = std::popcount(adj[v] & s);
            if (d < 2) {
                deg_ok = false;
                break;
            }
            edges2 += d;
        }
        if (!deg_ok || edges2 != 4 * std::popcount(s)) continue;

        std::vector<int> S;
        for (std::uint32_t bits = s; bits; bits &= bits - 1) S.push_back(std::countr_zero(bits));

        // Connectivity of the induced subgraph.
        {
            std::uint32_t seen = 1u << S[0], frontier = seen;
            while (frontier) {
                std::uint32_t next = 0;
                for (std::uint32_t bits = frontier; bits; bits &= bits - 1)
                    next |= adj[std::countr_zero(bits)] & s;
                frontier = next & ~seen;
                seen |= next;
            }
            if (seen != s) continue;
        }

        const auto dec = decompose_regions(q, SubgraphMask::from_vertex_set(q, S));
        bool good = true;
        for (const auto& r : dec.regions)
            if (!r.two_cell || r.boundary_length != 4 || r.interior_vertices % 2 == 0) {
                good = false;
                break;
            }
        if (good) return S;
    }
    return std::nullopt;
}

// The three extendability characterizations, computed vs predicted.
// m=1: no blocking quadrangulation subgraph; m=2: no barrier 4-cycle;
// m=3: G is 8-regular.
inline std::vector<ExtendabilityVerdict> classify_extendability(const OptimalOneEmbedding& g,
                                                                int blocking_search_max_n = 20) {
    if (g.order() % 2) throw OddOrder("extendability classification needs even order");
    const auto labels = HomologyLabels::compute(g.quad_map());

    std::vector<ExtendabilityVerdict> out;
    for (int m = 1; m <= 3; ++m) {
        ExtendabilityVerdict v = is_m_extendable(g.graph(), m);
        switch (m) {
        case 1:
            try {
                v.extendable_predicted = !find_blocking_quad_subgraph(g, blocking_search_max_n);
            } catch (const BudgetExceeded&) {
                v.predicted_known = false;
            }
            break;
        case 2:
            v.extendable_predicted = barrier_cycles(g, 4, labels).empty();
            break;
        case 3:
            v.extendable_predicted = g.is_eight_regular();
            break;
        }
        if (v.predicted_known && v.extendable_computed != v.extendable_predicted)
            throw TheoremViolation("m=" + std::to_string(m) + " extendability: computed " +
                                   std::to_string(v.extendable_computed) + ", predicted " +
                                   std::to_string(v.extendable_predicted));
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace o1t
