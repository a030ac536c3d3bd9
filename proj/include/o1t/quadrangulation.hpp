#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "o1t/embedded_map.hpp"
#include "o1t/errors.hpp"

namespace o1t {

// A toroidal quadrangulation: every traced face has length 4, chi = 0,
// simple, connected. Provenance records either Q(p,r,q) parameters or the
// seed plus expansion-move history.
struct Quadrangulation {
    EmbeddedMap map;
    nlohmann::ordered_json provenance;
};

struct QuadVerdict {
    bool ok = false;
    std::string reason;
    int offending_face = -1; // index into trace_faces order when a face is wrong
};

inline QuadVerdict check_quadrangulation(const EmbeddedMap& m) {
    QuadVerdict v;
    if (!m.is_simple()) {
        v.reason = "not simple";
        return v;
    }
    if (!m.is_connected()) {
        v.reason = "disconnected";
        return v;
    }
    const auto faces = trace_faces(m);
    for (int f = 0; f < static_cast<int>(faces.size()); ++f)
        if (faces[f].length() != 4) {
            v.reason = "face of length " + std::to_string(faces[f].length());
            v.offending_face = f;
            return v;
        }
    const int chi = m.vertex_count() - m.edge_count() + static_cast<int>(faces.size());
    if (chi != 0) {
        v.reason = "euler characteristic " + std::to_string(chi);
        return v;
    }
    v.ok = true;
    return v;
}

inline bool is_quadrangulation(const EmbeddedMap& m) { return check_quadrangulation(m).ok; }

// Q(p,r,q): the p x q toroidal grid with seam shift r. Vertices (i,j) are
// indexed i*q + j; each rotation is (up, right, down, left) with the seam
// column p-1 wrapping to column 0 shifted by r meridian steps. r is
// normalized to 0..q-1. Construction validates and rejects non-simple
// parameter triples instead of pre-enumerating them.
inline Quadrangulation build_qprq(int p, int r, int q) {
    if (p < 1 || q < 3 || r < 0)
        throw Degenerate("Q(p,r,q) needs p >= 1, r >= 0, q >= 3");
    r %= q;
    const auto id = [q](int i, int j) { return i * q + j; };
    Rotation rot(static_cast<size_t>(p) * q);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) {
            const int up = id(i, (j + 1) % q);
            const int down = id(i, (j - 1 + q) % q);
            const int right = (i + 1 < p) ? id(i + 1, j) : id(0, (j + r) % q);
            const int left = (i > 0) ? id(i - 1, j) : id(p - 1, (j - r + q) % q);
            rot[id(i, j)] = {up, right, down, left};
        }
    EmbeddedMap m = EmbeddedMap::from_rotation(rot); // throws NonSimple on bad triples
    const auto verdict = check_quadrangulation(m);
    if (!verdict.ok)
        throw InternalInvariant("Q(" + std::to_string(p) + "," + std::to_string(r) + "," +
                                std::to_string(q) + ") failed validation: " + verdict.reason);
    Quadrangulation qd;
    qd.map = std::move(m);
    qd.provenance = {{"family", "qprq"}, {"p", p}, {"r", r}, {"q", q}};
    return qd;
}

// Splits vertex v into v1 (= v) and v2 (appended). The rotation arc
// strictly between a and b stays on v1, the other arc moves to v2; both
// halves keep a and b, and the quadrilateral a v1 b v2 becomes a new face.
// Net effect +1 vertex, +2 edges, +1 face. The result is re-validated and
// rejected when it stops being a simple quadrangulation.
inline Quadrangulation vertex_split(const Quadrangulation& qd, int v, int a, int b) {
    const EmbeddedMap& m = qd.map;
    const auto rot_v = m.neighbors(v);
    const int deg = static_cast<int>(rot_v.size());
    int ia = -1, ib = -1;
    for (int i = 0; i < deg; ++i) {
        if (rot_v[i] == a) ia = i;
        if (rot_v[i] == b) ib = i;
    }
    if (ia < 0 || ib < 0 || a == b)
        throw AdjacentSplitNeighbors("a and b must be distinct neighbors of v");
    if ((ia + 1) % deg == ib || (ib + 1) % deg == ia)
        throw AdjacentSplitNeighbors("a and b are consecutive in v's rotation");

    const int v1 = v;
    const int v2 = m.vertex_count();
    // Rotation-consecutive pairs assigned to v1: along the arc a..b.
    std::vector<std::pair<int, int>> v1_corners;
    for (int i = ia; i != ib; i = (i + 1) % deg)
        v1_corners.emplace_back(rot_v[i], rot_v[(i + 1) % deg]);

    const auto corner_on_v1 = [&](int u, int w) {
        for (auto& [x, y] : v1_corners)
            if ((x == u && y == w) || (x == w && y == u)) return true;
        return false;
    };

    const auto faces = trace_faces(m);
    std::vector<std::vector<int>> new_faces;
    new_faces.reserve(faces.size() + 1);
    for (const auto& f : faces) {
        auto verts = f.vertices(m);
        const int k = static_cast<int>(verts.size());
        for (int i = 0; i < k; ++i) {
            if (verts[i] != v) continue;
            const int prev = verts[(i + k - 1) % k];
            const int next = verts[(i + 1) % k];
            verts[i] = corner_on_v1(prev, next) ? v1 : v2;
        }
        new_faces.push_back(std::move(verts));
    }

    // The new quadrilateral's orientation must match the global one; try
    // both and keep whichever reassembles into a valid rotation system.
    for (const std::vector<int> quad : {std::vector<int>{a, v1, b, v2}, std::vector<int>{a, v2, b, v1}}) {
        auto candidate = new_faces;
        candidate.push_back(quad);
        EmbeddedMap rebuilt;
        try {
            rebuilt = EmbeddedMap::from_faces(m.vertex_count() + 1, candidate, true);
        } catch (const InconsistentRotation&) {
            continue;
        }
        const auto verdict = check_quadrangulation(rebuilt);
        if (!verdict.ok) throw ResultNonSimple("split result rejected: " + verdict.reason);
        Quadrangulation out;
        out.map = std::move(rebuilt);
        out.provenance = qd.provenance;
        if (!out.provenance.contains("moves")) {
            out.provenance = {{"family", "split"}, {"seed_provenance", qd.provenance},
                              {"moves", nlohmann::ordered_json::array()}};
        }
        out.provenance["moves"].push_back({{"op", "vertex_split"}, {"v", v}, {"a", a}, {"b", b}});
        return out;
    }
    throw InternalInvariant("vertex_split could not reassemble either orientation");
}

namespace detail {

// Attempt a dart bijection m1 -> m2 with map[d1] = d2, commuting with the
// involution and with sigma (or sigma^-1 when mirrored).
inline bool extend_dart_map(const EmbeddedMap& m1, const EmbeddedMap& m2, int d1, int d2,
                            bool mirror) {
    std::vector<int> img(m1.dart_count(), -1), pre(m2.dart_count(), -1);
    std::vector<int> stack{d1};
    img[d1] = d2;
    pre[d2] = d1;
    const auto push = [&](int from, int to) {
        if (img[from] >= 0) return img[from] == to;
        if (pre[to] >= 0) return false;
        img[from] = to;
        pre[to] = from;
        stack.push_back(from);
        return true;
    };
    while (!stack.empty()) {
        const int d = stack.back();
        stack.pop_back();
        const int e = img[d];
        if (!push(m1.opposite(d), m2.opposite(e))) return false;
        if (!push(m1.next_at_vertex(d), mirror ? m2.prev_at_vertex(e) : m2.next_at_vertex(e)))
            return false;
    }
    for (int d = 0; d < m1.dart_count(); ++d)
        if (img[d] < 0) return false; // m1 disconnected relative to the root
    return true;
}

} // namespace detail

// Embedded-map isomorphism by exhaustive rooted dart search, trying both
// orientations. O(darts^2) per pair; ample at desk scale.
inline bool maps_isomorphic(const EmbeddedMap& m1, const EmbeddedMap& m2) {
    if (m1.vertex_count() != m2.vertex_count() || m1.dart_count() != m2.dart_count()) return false;
    if (degrees(m1) != degrees(m2)) return false;
    if (m1.dart_count() == 0) return true;
    for (int d2 = 0; d2 < m2.dart_count(); ++d2)
        for (bool mirror : {false, true})
            if (detail::extend_dart_map(m1, m2, 0, d2, mirror)) return true;
    return false;
}

// Parameters (p, r) with p >= 4 of a Q(p,r,3) isomorphic to qd, if any.
// Candidates are exhausted by p = n/3 and r in 0..2.
inline std::optional<std::pair<int, int>> as_qpr3(const Quadrangulation& qd) {
    const auto degs = degrees(qd.map);
    if (degs.empty() || degs.front() != 4 || degs.back() != 4)
        throw NotFourRegular("Q(p,r,3) recognition needs a 4-regular quadrangulation");
    const int n = qd.map.vertex_count();
    if (n % 3 != 0) return std::nullopt;
    const int p = n / 3;
    if (p < 4) return std::nullopt;
    for (int r = 0; r < 3; ++r) {
        try {
            if (maps_isomorphic(qd.map, build_qprq(p, r, 3).map)) return std::make_pair(p, r);
        } catch (const NonSimple&) {
        }
    }
    return std::nullopt;
}

} // namespace o1t
