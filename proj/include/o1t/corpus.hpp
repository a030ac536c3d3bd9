#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "o1t/one_embedding.hpp"

namespace o1t {

// 4-regular family seeds kept small enough for the verification suites.
// Non-simple triples are skipped at generation time.
inline std::vector<std::array<int, 3>> default_family_seeds(int max_vertices = 30) {
    std::vector<std::array<int, 3>> out;
    for (int q = 3; q <= 5; ++q)
        for (int p = 2; p <= 8; ++p)
            for (int r = 0; r < std::min(q, 3); ++r)
                if (p * q <= max_vertices) out.push_back({p, r, q});
    return out;
}

// One corpus instance: a family seed expanded by a number of random vertex
// splits, with rejection of moves whose result is not a simple
// quadrangulation or whose derived O1TG is not simple. Deterministic for a
// fixed rng state.
inline Quadrangulation random_expansion(Quadrangulation qd, int moves, std::mt19937_64& rng,
                                        int max_attempts_per_move = 64) {
    for (int k = 0; k < moves; ++k) {
        bool applied = false;
        for (int attempt = 0; attempt < max_attempts_per_move && !applied; ++attempt) {
            const int v = static_cast<int>(rng() % qd.map.vertex_count());
            const auto nb = qd.map.neighbors(v);
            const int deg = static_cast<int>(nb.size());
            if (deg < 4) continue;
            const int ia = static_cast<int>(rng() % deg);
            const int offset = 2 + static_cast<int>(rng() % (deg - 3)); // skip both consecutive slots
            const int ib = (ia + offset) % deg;
            try {
                Quadrangulation next = vertex_split(qd, v, nb[ia], nb[ib]);
                build_o1t(next); // rejection: derived O1TG must be simple
                qd = std::move(next);
                applied = true;
            } catch (const Error&) {
                // rejected move, resample
            }
        }
        if (!applied) break; // no applicable move found; keep what we have
    }
    return qd;
}

struct CorpusParams {
    std::uint64_t seed = 0;
    int max_moves = 6;
    int count = 200;
    int max_vertices = 30;
};

// Deterministic corpus: family seeds cycled in order, each expanded by a
// per-instance-seeded random move sequence.
inline std::vector<OptimalOneEmbedding> generate_corpus(const CorpusParams& params) {
    const auto seeds = default_family_seeds(params.max_vertices);
    std::vector<OptimalOneEmbedding> out;
    int produced = 0;
    for (int index = 0; produced < params.count; ++index) {
        const auto [p, r, q] = seeds[index % seeds.size()];
        std::mt19937_64 rng(params.seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(index));
        const int moves = static_cast<int>(rng() % (params.max_moves + 1));
        Quadrangulation qd;
        try {
            qd = build_qprq(p, r, q);
        } catch (const NonSimple&) {
            continue;
        }
        const int headroom = params.max_vertices - qd.map.vertex_count();
        qd = random_expansion(std::move(qd), std::min(moves, headroom), rng);
        try {
            auto g = build_o1t(std::move(qd));
            out.push_back(std::move(g));
            ++produced;
        } catch (const DiagonalCollision&) {
            continue; // seed itself not polyhedral (should not happen for Q(p,r,q))
        }
    }
    return out;
}

} // namespace o1t
