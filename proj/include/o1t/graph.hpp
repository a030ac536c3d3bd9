#pragma once

#include <algorithm>
#include <vector>

namespace o1t {

// Plain simple graph used by the connectivity and matching routines.
struct SimpleGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;
    std::vector<std::pair<int, int>> edges; // sorted pairs (u < v), ascending

    SimpleGraph() = default;
    explicit SimpleGraph(int vertex_count) : n(vertex_count), adj(vertex_count) {}

    void add_edge(int u, int v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }

    bool adjacent(int u, int v) const {
        return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
    }

    void finish() {
        for (auto& a : adj) std::sort(a.begin(), a.end());
        std::sort(edges.begin(), edges.end());
    }

    static SimpleGraph with_vertices(int n) {
        SimpleGraph g;
        g.n = n;
        g.adj.resize(n);
        return g;
    }

    // Subgraph induced by keeping vertices where keep[v] != 0; vertex ids
    // are preserved (removed vertices become isolated) when compact=false.
    SimpleGraph remove_vertices(const std::vector<char>& removed) const {
        SimpleGraph g = with_vertices(n);
        for (const auto& [u, v] : edges)
            if (!removed[u] && !removed[v]) g.add_edge(u, v);
        g.finish();
        return g;
    }

    // Connected components among vertices with removed[v] == 0.
    std::vector<std::vector<int>> components(const std::vector<char>& removed) const {
        std::vector<std::vector<int>> comps;
        std::vector<char> vis(n, 0);
        for (int s = 0; s < n; ++s) {
            if (removed[s] || vis[s]) continue;
            std::vector<int> comp, stack{s};
            vis[s] = 1;
            while (!stack.empty()) {
                const int v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                for (int w : adj[v])
                    if (!removed[w] && !vis[w]) {
                        vis[w] = 1;
                        stack.push_back(w);
                    }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    bool is_connected() const {
        return components(std::vector<char>(n, 0)).size() == 1 && n > 0;
    }
};

} // namespace o1t
