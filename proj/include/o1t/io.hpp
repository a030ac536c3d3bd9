#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "o1t/one_embedding.hpp"

namespace o1t {

// --- "rot v1" text format ------------------------------------------------
//
//   # optional comments
//   n <count>
//   <id>: <nbr> <nbr> ...     one line per vertex, ccw rotation
//
// Canonical output lists vertices ascending and rotates each cyclic list so
// its smallest neighbor comes first; round-trips are bit-exact.

inline std::string write_rot(const Rotation& rot) {
    std::ostringstream out;
    out << "n " << rot.size() << "\n";
    for (size_t v = 0; v < rot.size(); ++v) {
        auto cyc = rot[v];
        if (!cyc.empty()) {
            const auto mn = std::min_element(cyc.begin(), cyc.end());
            std::rotate(cyc.begin(), mn, cyc.end());
        }
        out << v << ":";
        for (int w : cyc) out << " " << w;
        out << "\n";
    }
    return out.str();
}

inline std::string write_rot(const EmbeddedMap& m) { return write_rot(m.rotation()); }

inline Rotation parse_rot(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    Rotation rot;
    std::vector<char> seen;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "n") {
            if (n >= 0) throw ParseError("duplicate 'n' line");
            if (!(ls >> n) || n < 0) throw ParseError("bad vertex count");
            rot.resize(n);
            seen.assign(n, 0);
            continue;
        }
        if (n < 0) throw ParseError("rotation line before 'n'");
        if (tok.empty() || tok.back() != ':') throw ParseError("expected '<id>:', got '" + tok + "'");
        int v = -1;
        try {
            v = std::stoi(tok.substr(0, tok.size() - 1));
        } catch (...) {
            throw ParseError("bad vertex id '" + tok + "'");
        }
        if (v < 0 || v >= n) throw ParseError("vertex id out of range: " + std::to_string(v));
        if (seen[v]) throw ParseError("duplicate rotation for vertex " + std::to_string(v));
        seen[v] = 1;
        int w;
        while (ls >> w) {
            if (w < 0 || w >= n)
                throw ParseError("neighbor id out of range on line of vertex " +
                                 std::to_string(v) + ": " + std::to_string(w));
            rot[v].push_back(w);
        }
        if (!ls.eof()) throw ParseError("trailing junk on rotation line of vertex " + std::to_string(v));
    }
    if (n < 0) throw ParseError("missing 'n' line");
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw ParseError("missing rotation for vertex " + std::to_string(v));
    return rot;
}

// --- "o1t v1" JSON format --------------------------------------------------
//
// Fields in canonical key order: format, rotation (per rot v1 canonical
// start), crossing_pairs (face 4-tuples; diagonals implied), provenance.

inline nlohmann::ordered_json to_o1t_json(const OptimalOneEmbedding& g) {
    nlohmann::ordered_json j;
    j["format"] = "o1t v1";
    auto rot = g.quad_map().rotation();
    for (auto& cyc : rot) {
        const auto mn = std::min_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), mn, cyc.end());
    }
    j["rotation"] = rot;
    j["crossing_pairs"] = g.crossing_faces();
    j["provenance"] = g.quad().provenance;
    return j;
}

inline OptimalOneEmbedding from_o1t_json(const nlohmann::ordered_json& j) {
    try {
        if (j.at("format") != "o1t v1") throw ParseError("unknown format field");
        Quadrangulation qd;
        qd.map = EmbeddedMap::from_rotation(j.at("rotation").get<Rotation>());
        qd.provenance = j.value("provenance", nlohmann::ordered_json::object());
        auto g = build_o1t(std::move(qd));
        // The stored crossing pairs must match the rebuilt ones (same map,
        // same face trace); tolerate reordering of faces.
        if (j.contains("crossing_pairs")) {
            auto stored = j.at("crossing_pairs").get<std::vector<std::array<int, 4>>>();
            auto rebuilt = g.crossing_faces();
            const auto canon = [](std::vector<std::array<int, 4>>& v) {
                for (auto& f : v) {
                    const auto mn = std::min_element(f.begin(), f.end());
                    std::rotate(f.begin(), mn, f.end());
                    if (f[1] > f[3]) std::swap(f[1], f[3]);
                }
                std::sort(v.begin(), v.end());
            };
            canon(stored);
            canon(rebuilt);
            if (stored != rebuilt) throw ParseError("crossing_pairs disagree with the rotation");
        }
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed o1t v1 document: ") + e.what());
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << content;
}

// Loads an instance from either format, keyed on the file content.
inline OptimalOneEmbedding load_instance(const std::string& path) {
    const std::string text = read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::ordered_json j;
        try {
            j = nlohmann::ordered_json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad JSON in ") + path + ": " + e.what());
        }
        return from_o1t_json(j);
    }
    Quadrangulation qd;
    qd.map = EmbeddedMap::from_rotation(parse_rot(text));
    qd.provenance = {{"family", "file"}, {"path", path}};
    return build_o1t(std::move(qd));
}

} // namespace o1t
