#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "o1t/one_embedding.hpp"

namespace o1t {

// Coordinates in a fixed (per-instance, non-canonical) basis of the first
// integer homology of the torus. Facial walks sum to zero; concatenation
// adds. Classifications only use basis-independent predicates.
struct HomologyClass {
    long long a = 0, b = 0;

    HomologyClass operator+(HomologyClass o) const { return {a + o.a, b + o.b}; }
    HomologyClass operator-() const { return {-a, -b}; }
    bool operator==(const HomologyClass&) const = default;
    bool is_zero() const { return a == 0 && b == 0; }
    bool is_primitive() const { return std::gcd(std::abs(a), std::abs(b)) == 1; }
};

// Per-dart homology labels from a tree-cotree decomposition: spanning tree
// darts carry (0,0), the two leftover edges carry the unit classes, and
// dual-tree edges are solved from the zero-sum constraint on each face.
class HomologyLabels {
public:
    static HomologyLabels compute(const EmbeddedMap& m) {
        if (!m.is_connected()) throw Disconnected("homology labels need a connected map");
        const int D = m.dart_count();
        const auto faces = trace_faces(m);
        const auto face_of = face_of_dart(m, faces);
        const int F = static_cast<int>(faces.size());

        // Primal spanning tree (BFS over darts).
        std::vector<char> in_tree(D, 0), vis(m.vertex_count(), 0);
        std::vector<int> queue{0};
        vis[0] = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            const int v = queue[qi];
            for (int d : m.darts_at(v)) {
                const int w = m.target(d);
                if (!vis[w]) {
                    vis[w] = 1;
                    in_tree[d] = in_tree[m.opposite(d)] = 1;
                    queue.push_back(w);
                }
            }
        }

        // Dual spanning tree over faces through non-tree edges.
        std::vector<char> in_dual(D, 0), fvis(F, 0);
        std::vector<int> fqueue{0};
        fvis[0] = 1;
        for (size_t qi = 0; qi < fqueue.size(); ++qi) {
            for (int d : faces[fqueue[qi]].darts) {
                if (in_tree[d]) continue;
                const int g = face_of[m.opposite(d)];
                if (!fvis[g]) {
                    fvis[g] = 1;
                    in_dual[d] = in_dual[m.opposite(d)] = 1;
                    fqueue.push_back(g);
                }
            }
        }
        if (static_cast<int>(fqueue.size()) != F)
            throw InternalInvariant("dual graph disconnected");

        HomologyLabels h;
        h.label_.assign(D, HomologyClass{});
        h.map_dart_count_ = D;
        std::vector<char> known(D, 0);
        for (int d = 0; d < D; ++d)
            if (in_tree[d]) known[d] = 1;

        // Leftover edges generate the homology; there must be exactly two.
        std::vector<int> generators;
        for (int d = 0; d < D; ++d)
            if (d < m.opposite(d) && !in_tree[d] && !in_dual[d]) generators.push_back(d);
        if (generators.size() != 2)
            throw InternalInvariant("tree-cotree leftover count " +
                                    std::to_string(generators.size()) + ", map is not toroidal");
        h.set(generators[0], m, {1, 0}, known);
        h.set(generators[1], m, {0, 1}, known);

        // Peel dual-tree leaves: any face whose boundary has exactly one
        // unknown edge (with nonzero net orientation) determines it.
        bool progress = true;
        while (progress) {
            progress = false;
            for (const auto& f : faces) {
                int unknown_dart = -1, unknown_coeff = 0, nun = 0;
                HomologyClass sum{};
                for (int d : f.darts) {
                    if (known[d]) {
                        sum = sum + h.label_[d];
                    } else {
                        const int canon = std::min(d, m.opposite(d));
                        if (unknown_dart >= 0 && std::min(unknown_dart, m.opposite(unknown_dart)) != canon) {
                            nun = 2;
                            break;
                        }
                        if (unknown_dart < 0) unknown_dart = d;
                        unknown_coeff += (d == unknown_dart) ? 1 : -1;
                        nun = 1;
                    }
                }
                if (nun != 1 || unknown_coeff == 0) continue;
                // coeff * x + sum = 0 with coeff in {-1, +1} for quad faces
                HomologyClass x = (unknown_coeff == 1) ? -sum : sum;
                h.set(unknown_dart, m, x, known);
                progress = true;
            }
        }
        for (int d = 0; d < D; ++d)
            if (!known[d]) throw InternalInvariant("homology label propagation stalled");

        // Every facial walk must now sum to zero.
        for (const auto& f : faces) {
            HomologyClass sum{};
            for (int d : f.darts) sum = sum + h.label_[d];
            if (!sum.is_zero()) throw InternalInvariant("facial walk with nonzero class");
        }
        return h;
    }

    HomologyClass dart_label(int d) const { return label_[d]; }

    // Class of a closed walk given as a vertex sequence (first != last;
    // closes implicitly).
    HomologyClass walk_class(const EmbeddedMap& m, const std::vector<int>& walk) const {
        const int k = static_cast<int>(walk.size());
        if (k < 1) throw NotClosed("empty walk");
        HomologyClass sum{};
        for (int i = 0; i < k; ++i) {
            const int d = m.dart_between(walk[i], walk[(i + 1) % k]);
            if (d < 0) throw NotClosed("walk uses a non-edge " + std::to_string(walk[i]) + "-" +
                                       std::to_string(walk[(i + 1) % k]));
            sum = sum + label_[d];
        }
        return sum;
    }

    HomologyClass cycle_class(const EmbeddedMap& m, const std::vector<int>& cycle) const {
        return walk_class(m, cycle);
    }

    // A simple closed curve on the torus is null-homotopic iff
    // null-homologous, so triviality reduces to class (0,0).
    bool is_trivial_cycle(const EmbeddedMap& m, const std::vector<int>& cycle) const {
        require_simple(cycle);
        return walk_class(m, cycle).is_zero();
    }

    // Free homotopy of simple closed curves on the torus: equal classes up
    // to a global sign.
    bool freely_homotopic(const EmbeddedMap& m, const std::vector<int>& c1,
                          const std::vector<int>& c2) const {
        require_simple(c1);
        require_simple(c2);
        const auto h1 = walk_class(m, c1);
        const auto h2 = walk_class(m, c2);
        return h1 == h2 || h1 == -h2;
    }

private:
    void set(int d, const EmbeddedMap& m, HomologyClass x, std::vector<char>& known) {
        label_[d] = x;
        label_[m.opposite(d)] = -x;
        known[d] = known[m.opposite(d)] = 1;
    }

    static void require_simple(const std::vector<int>& cycle) {
        std::set<int> s(cycle.begin(), cycle.end());
        if (s.size() != cycle.size() || cycle.size() < 3)
            throw NotSimpleCycle("cycle repeats a vertex or is too short");
    }

    std::vector<HomologyClass> label_;
    int map_dart_count_ = 0;
};

// A subgraph K of an embedded map, by dart membership. Induced vertex set
// and edge set are implied by the mask.
struct SubgraphMask {
    std::vector<char> dart_in_k;   // size = dart_count
    std::vector<char> vertex_in_k; // size = vertex_count

    static SubgraphMask from_vertex_set(const EmbeddedMap& m, const std::vector<int>& s) {
        SubgraphMask k;
        k.vertex_in_k.assign(m.vertex_count(), 0);
        for (int v : s) k.vertex_in_k[v] = 1;
        k.dart_in_k.assign(m.dart_count(), 0);
        for (int d = 0; d < m.dart_count(); ++d)
            if (k.vertex_in_k[m.origin(d)] && k.vertex_in_k[m.target(d)]) k.dart_in_k[d] = 1;
        return k;
    }

    static SubgraphMask from_cycle(const EmbeddedMap& m, const std::vector<int>& cycle) {
        SubgraphMask k;
        k.vertex_in_k.assign(m.vertex_count(), 0);
        k.dart_in_k.assign(m.dart_count(), 0);
        const int n = static_cast<int>(cycle.size());
        for (int i = 0; i < n; ++i) {
            k.vertex_in_k[cycle[i]] = 1;
            const int d = m.dart_between(cycle[i], cycle[(i + 1) % n]);
            if (d < 0) throw NotClosed("cycle uses a non-edge");
            k.dart_in_k[d] = k.dart_in_k[m.opposite(d)] = 1;
        }
        return k;
    }

    int edge_count() const {
        return static_cast<int>(std::count(dart_in_k.begin(), dart_in_k.end(), 1)) / 2;
    }
    int vertex_count() const {
        return static_cast<int>(std::count(vertex_in_k.begin(), vertex_in_k.end(), 1));
    }
};

// One topological region of the torus minus K.
struct Region {
    std::vector<int> faces;                       // ambient face ids inside the region
    std::vector<std::vector<int>> boundary_walks; // K-darts, one list per boundary component
    int boundary_length = 0;                      // deg(f): edges on both sides count twice
    int interior_vertices = 0;
    int interior_edges = 0;
    int euler_open = 0; // V_int - E_int + F
    bool two_cell = false;
};

struct RegionDecomposition {
    std::vector<Region> regions;
    std::vector<int> region_of_face; // ambient face id -> region index
};

// Faces of the ambient quadrangulation grouped into components of the
// torus minus K: union-find merging across every ambient edge not in K,
// boundary walks traced along K's darts with the inherited rotation.
inline RegionDecomposition decompose_regions(const EmbeddedMap& m, const SubgraphMask& k) {
    const auto faces = trace_faces(m);
    const auto face_of = face_of_dart(m, faces);
    const int F = static_cast<int>(faces.size());

    std::vector<int> uf(F);
    std::iota(uf.begin(), uf.end(), 0);
    const auto find = [&uf](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (int d = 0; d < m.dart_count(); ++d)
        if (!k.dart_in_k[d]) {
            const int a = find(face_of[d]), b = find(face_of[m.opposite(d)]);
            if (a != b) uf[a] = b;
        }

    std::vector<int> root_to_region(F, -1);
    RegionDecomposition out;
    out.region_of_face.assign(F, -1);
    for (int f = 0; f < F; ++f) {
        const int r = find(f);
        if (root_to_region[r] < 0) {
            root_to_region[r] = static_cast<int>(out.regions.size());
            out.regions.emplace_back();
        }
        out.region_of_face[f] = root_to_region[r];
        out.regions[out.region_of_face[f]].faces.push_back(f);
    }

    // Boundary walks: orbits of K-darts under "opposite, then first K-dart
    // in rotation order". Each walk borders the region of the ambient face
    // lying along it.
    std::vector<char> seen(m.dart_count(), 0);
    for (int d0 = 0; d0 < m.dart_count(); ++d0) {
        if (!k.dart_in_k[d0] || seen[d0]) continue;
        std::vector<int> walk;
        int d = d0;
        do {
            seen[d] = 1;
            walk.push_back(d);
            int e = m.next_at_vertex(m.opposite(d));
            while (!k.dart_in_k[e]) e = m.next_at_vertex(e);
            d = e;
        } while (d != d0);
        const int region = out.region_of_face[face_of[walk.front()]];
        for (int w : walk)
            if (out.region_of_face[face_of[w]] != region)
                throw InternalInvariant("boundary walk crosses regions");
        out.regions[region].boundary_length += static_cast<int>(walk.size());
        out.regions[region].boundary_walks.push_back(std::move(walk));
    }

    // Interior vertices: all incident faces of a non-K vertex lie in one
    // region because none of its edges are in K.
    for (int v = 0; v < m.vertex_count(); ++v) {
        if (k.vertex_in_k[v]) continue;
        const int region = out.region_of_face[face_of[m.darts_at(v).front()]];
        ++out.regions[region].interior_vertices;
    }
    for (int d = 0; d < m.dart_count(); ++d) {
        if (k.dart_in_k[d] || d > m.opposite(d)) continue;
        ++out.regions[out.region_of_face[face_of[d]]].interior_edges;
    }
    for (auto& r : out.regions) {
        r.euler_open = r.interior_vertices - r.interior_edges + static_cast<int>(r.faces.size());
        r.two_cell = (r.euler_open == 1) && (r.boundary_walks.size() == 1);
    }
    return out;
}

// Interior vertex count and region index of the 2-cell side of a trivial
// simple cycle. Exactly one side of a trivial cycle on the torus is a disk.
inline std::pair<int, int> disk_interior(const EmbeddedMap& m, const std::vector<int>& cycle) {
    const auto dec = decompose_regions(m, SubgraphMask::from_cycle(m, cycle));
    int disk = -1;
    for (int i = 0; i < static_cast<int>(dec.regions.size()); ++i) {
        if (!dec.regions[i].two_cell) continue;
        if (disk >= 0) throw AmbiguousDisk("both sides of the cycle are disks");
        disk = i;
    }
    if (disk < 0) throw NoDiskSide("cycle bounds no 2-cell; it is not trivial");
    return {dec.regions[disk].interior_vertices, disk};
}

// All simple cycles of length <= max_len, deduplicated by rooting each
// cycle at its smallest vertex and orienting toward the smaller neighbor.
inline std::vector<std::vector<int>> enumerate_simple_cycles(const SimpleGraph& g, int max_len) {
    std::vector<std::vector<int>> cycles;
    std::vector<int> path;
    std::vector<char> on_path(g.n, 0);
    const std::function<void(int, int)> dfs = [&](int root, int v) {
        for (int w : g.adj[v]) {
            if (w == root && path.size() >= 3) {
                if (path[1] < path.back()) cycles.push_back(path);
                continue;
            }
            if (w <= root || on_path[w] || static_cast<int>(path.size()) >= max_len) continue;
            on_path[w] = 1;
            path.push_back(w);
            dfs(root, w);
            path.pop_back();
            on_path[w] = 0;
        }
    };
    for (int root = 0; root < g.n; ++root) {
        path = {root};
        std::fill(on_path.begin(), on_path.end(), 0);
        on_path[root] = 1;
        dfs(root, root);
    }
    return cycles;
}

inline SimpleGraph map_as_graph(const EmbeddedMap& m) {
    SimpleGraph g = SimpleGraph::with_vertices(m.vertex_count());
    for (const auto& [u, v] : m.edges()) g.add_edge(u, v);
    g.finish();
    return g;
}

// A trivial cycle of the quadrangular subgraph whose disk side holds an
// odd number of vertices.
struct BarrierCycle {
    std::vector<int> cycle;
    int region = -1;
    int interior_vertices = 0;
};

// Enumerate simple cycles of Q(G) of length <= k and keep the trivial ones
// with odd disk interior.
inline std::vector<BarrierCycle> barrier_cycles(const OptimalOneEmbedding& g, int k,
                                                const HomologyLabels& labels) {
    std::vector<BarrierCycle> out;
    const EmbeddedMap& q = g.quad_map();
    for (const auto& c : enumerate_simple_cycles(map_as_graph(q), k)) {
        if (!labels.is_trivial_cycle(q, c)) continue;
        const auto [count, region] = disk_interior(q, c);
        if (count % 2 == 1) out.push_back({c, region, count});
    }
    return out;
}

inline std::vector<BarrierCycle> barrier_cycles(const OptimalOneEmbedding& g, int k) {
    return barrier_cycles(g, k, HomologyLabels::compute(g.quad_map()));
}

} // namespace o1t
