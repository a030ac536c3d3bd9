#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "o1t/errors.hpp"

namespace o1t {

// Per-vertex counterclockwise neighbor lists. Rotations are cyclic; the
// starting element carries no meaning.
using Rotation = std::vector<std::vector<int>>;

// Combinatorial map on an orientable surface. Each edge contributes two
// darts; opposite(d) pairs them, next_at_vertex(d) is the ccw successor
// around origin(d). Face tracing follows opposite-then-successor.
// Immutable after construction.
class EmbeddedMap {
public:
    static EmbeddedMap from_rotation(const Rotation& rot, bool allow_nonsimple = false) {
        const int n = static_cast<int>(rot.size());
        if (n < 3)
            throw Degenerate("map needs at least 3 vertices, got " + std::to_string(n));
        for (int v = 0; v < n; ++v)
            if (rot[v].empty())
                throw Degenerate("vertex " + std::to_string(v) + " has empty rotation");

        // Mutual-consistency check: u lists v exactly as often as v lists u.
        std::map<std::pair<int, int>, int> mult;
        for (int u = 0; u < n; ++u) {
            for (int v : rot[u]) {
                if (v < 0 || v >= n)
                    throw InconsistentRotation("neighbor out of range at vertex " + std::to_string(u));
                ++mult[{u, v}];
            }
        }
        for (const auto& [uv, c] : mult) {
            auto it = mult.find({uv.second, uv.first});
            if (uv.first != uv.second && (it == mult.end() || it->second != c))
                throw InconsistentRotation("asymmetric adjacency " + std::to_string(uv.first) +
                                           "-" + std::to_string(uv.second));
        }
        if (!allow_nonsimple) {
            for (int u = 0; u < n; ++u)
                for (int v : rot[u]) {
                    if (v == u) throw NonSimple("loop at vertex " + std::to_string(u));
                    if (mult[{u, v}] > 1)
                        throw NonSimple("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
                }
        } else {
            for (int u = 0; u < n; ++u)
                for (int v : rot[u])
                    if (v == u && mult[{u, u}] % 2 != 0)
                        throw InconsistentRotation("odd loop multiplicity at " + std::to_string(u));
        }

        EmbeddedMap m;
        m.n_ = n;
        int dart_id = 0;
        m.vert_darts_.resize(n);
        for (int u = 0; u < n; ++u)
            for (int k = 0; k < static_cast<int>(rot[u].size()); ++k) {
                m.origin_.push_back(u);
                m.target_.push_back(rot[u][k]);
                m.vert_darts_[u].push_back(dart_id++);
            }
        const int D = dart_id;
        m.alpha_.assign(D, -1);
        // Match the k-th dart u->v with the k-th dart v->u (unique for simple maps).
        std::map<std::pair<int, int>, std::vector<int>> pending;
        for (int d = 0; d < D; ++d) {
            const int u = m.origin_[d], v = m.target_[d];
            auto& back = pending[{v, u}];
            if (!back.empty() && (u != v || back.front() != d)) {
                m.alpha_[d] = back.front();
                m.alpha_[back.front()] = d;
                back.erase(back.begin());
            } else {
                pending[{u, v}].push_back(d);
            }
        }
        for (int d = 0; d < D; ++d)
            if (m.alpha_[d] < 0)
                throw InconsistentRotation("unpaired dart " + std::to_string(d));

        m.sigma_.assign(D, -1);
        m.sigma_inv_.assign(D, -1);
        for (int u = 0; u < n; ++u) {
            const auto& ds = m.vert_darts_[u];
            const int k = static_cast<int>(ds.size());
            for (int i = 0; i < k; ++i) {
                m.sigma_[ds[i]] = ds[(i + 1) % k];
                m.sigma_inv_[ds[(i + 1) % k]] = ds[i];
            }
        }
        return m;
    }

    // Rebuild a map from an oriented face list: face walks are vertex
    // sequences, each consecutive pair (cyclically) one dart. The rotation
    // is recovered from sigma = face-successor of the opposite dart; fails
    // if the recovered rotation is not a single cycle per vertex.
    static EmbeddedMap from_faces(int vertex_count, const std::vector<std::vector<int>>& faces,
                                  bool allow_nonsimple = false) {
        std::vector<int> origin, face_next;
        std::map<std::pair<int, int>, std::vector<int>> by_pair;
        for (const auto& f : faces) {
            const int k = static_cast<int>(f.size());
            if (k < 1) throw Degenerate("empty face walk");
            const int base = static_cast<int>(origin.size());
            for (int i = 0; i < k; ++i) {
                origin.push_back(f[i]);
                face_next.push_back(base + (i + 1) % k);
                by_pair[{f[i], f[(i + 1) % k]}].push_back(base + i);
            }
        }
        const int D = static_cast<int>(origin.size());
        std::vector<int> alpha(D, -1);
        for (auto& [uv, list] : by_pair) {
            if (uv.first > uv.second) continue;
            if (uv.first == uv.second) {
                if (list.size() % 2) throw InconsistentRotation("odd loop walk multiplicity");
                for (size_t i = 0; i + 1 < list.size(); i += 2) {
                    alpha[list[i]] = list[i + 1];
                    alpha[list[i + 1]] = list[i];
                }
                continue;
            }
            auto it = by_pair.find({uv.second, uv.first});
            if (it == by_pair.end() || it->second.size() != list.size())
                throw InconsistentRotation("unmatched face-walk edge " + std::to_string(uv.first) +
                                           "-" + std::to_string(uv.second));
            for (size_t i = 0; i < list.size(); ++i) {
                alpha[list[i]] = it->second[i];
                alpha[it->second[i]] = list[i];
            }
        }
        // sigma(e) = face_next(alpha(e)); must decompose into one cycle per vertex.
        std::vector<int> sigma(D);
        for (int d = 0; d < D; ++d) sigma[d] = face_next[alpha[d]];
        std::vector<std::vector<int>> rot(vertex_count);
        std::vector<char> seen(D, 0);
        for (int d0 = 0; d0 < D; ++d0) {
            if (seen[d0]) continue;
            const int v = origin[d0];
            if (!rot[v].empty())
                throw InconsistentRotation("rotation at vertex " + std::to_string(v) +
                                           " splits into several cycles");
            int d = d0;
            do {
                if (origin[d] != v) throw InconsistentRotation("sigma leaves vertex orbit");
                seen[d] = 1;
                rot[v].push_back(origin[alpha[d]]);
                d = sigma[d];
            } while (d != d0);
        }
        return from_rotation(rot, allow_nonsimple);
    }

    int vertex_count() const { return n_; }
    int dart_count() const { return static_cast<int>(origin_.size()); }
    int edge_count() const { return dart_count() / 2; }

    int origin(int d) const { return origin_[d]; }
    int target(int d) const { return target_[d]; }
    int opposite(int d) const { return alpha_[d]; }
    int next_at_vertex(int d) const { return sigma_[d]; }
    int prev_at_vertex(int d) const { return sigma_inv_[d]; }
    // Face-tracing step: follow the paired dart, then its ccw successor.
    int face_next(int d) const { return sigma_[alpha_[d]]; }

    const std::vector<int>& darts_at(int v) const { return vert_darts_[v]; }
    int degree(int v) const { return static_cast<int>(vert_darts_[v].size()); }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        out.reserve(vert_darts_[v].size());
        for (int d : vert_darts_[v]) out.push_back(target_[d]);
        return out;
    }

    bool adjacent(int u, int v) const { return dart_between(u, v) >= 0; }

    // First dart u->v in u's rotation, or -1. Unique for simple maps.
    int dart_between(int u, int v) const {
        for (int d : vert_darts_[u])
            if (target_[d] == v) return d;
        return -1;
    }

    Rotation rotation() const {
        Rotation rot(n_);
        for (int v = 0; v < n_; ++v) rot[v] = neighbors(v);
        return rot;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(edge_count());
        for (int d = 0; d < dart_count(); ++d)
            if (d < alpha_[d] || (d == alpha_[d]))
                out.emplace_back(std::min(origin_[d], target_[d]), std::max(origin_[d], target_[d]));
        std::sort(out.begin(), out.end());
        return out;
    }

    bool is_connected() const {
        std::vector<char> vis(n_, 0);
        std::vector<int> stack{0};
        vis[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int d : vert_darts_[v])
                if (!vis[target_[d]]) {
                    vis[target_[d]] = 1;
                    ++count;
                    stack.push_back(target_[d]);
                }
        }
        return count == n_;
    }

    bool is_simple() const {
        for (int v = 0; v < n_; ++v) {
            auto nb = neighbors(v);
            std::sort(nb.begin(), nb.end());
            if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return false;
            if (std::binary_search(nb.begin(), nb.end(), v)) return false;
        }
        return true;
    }

private:
    int n_ = 0;
    std::vector<int> origin_, target_, alpha_, sigma_, sigma_inv_;
    std::vector<std::vector<int>> vert_darts_;
};

// One traced face orbit.
struct FaceWalk {
    std::vector<int> darts;

    int length() const { return static_cast<int>(darts.size()); }

    std::vector<int> vertices(const EmbeddedMap& m) const {
        std::vector<int> out;
        out.reserve(darts.size());
        for (int d : darts) out.push_back(m.origin(d));
        return out;
    }
};

inline std::vector<FaceWalk> trace_faces(const EmbeddedMap& m) {
    std::vector<FaceWalk> faces;
    std::vector<char> seen(m.dart_count(), 0);
    for (int d0 = 0; d0 < m.dart_count(); ++d0) {
        if (seen[d0]) continue;
        FaceWalk w;
        int d = d0;
        do {
            seen[d] = 1;
            w.darts.push_back(d);
            d = m.face_next(d);
        } while (d != d0);
        faces.push_back(std::move(w));
    }
    return faces;
}

// Dart -> index of its face orbit, aligned with trace_faces order.
inline std::vector<int> face_of_dart(const EmbeddedMap& m, const std::vector<FaceWalk>& faces) {
    std::vector<int> of(m.dart_count(), -1);
    for (int f = 0; f < static_cast<int>(faces.size()); ++f)
        for (int d : faces[f].darts) of[d] = f;
    return of;
}

inline int euler_characteristic(const EmbeddedMap& m) {
    if (!m.is_connected()) throw Disconnected("euler characteristic of a disconnected map");
    return m.vertex_count() - m.edge_count() + static_cast<int>(trace_faces(m).size());
}

// Sorted degree multiset.
inline std::vector<int> degrees(const EmbeddedMap& m) {
    std::vector<int> out(m.vertex_count());
    for (int v = 0; v < m.vertex_count(); ++v) out[v] = m.degree(v);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace o1t
