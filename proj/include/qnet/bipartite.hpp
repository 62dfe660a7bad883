#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qnet {

/// Bipartite graph given by left-side adjacency lists into [0, right_size).
struct BipartiteGraph {
    std::size_t right_size = 0;
    std::vector<std::vector<std::uint32_t>> adjacency;  // one list per left vertex

    std::size_t left_size() const { return adjacency.size(); }
};

struct BipartiteMatching {
    static constexpr std::uint32_t kFree = UINT32_MAX;

    std::vector<std::uint32_t> mate_of_left;   // right partner or kFree
    std::vector<std::uint32_t> mate_of_right;  // left partner or kFree
    std::size_t size = 0;
};

/// Maximum-cardinality matching (Hopcroft-Karp).
///
/// Deterministic: free left vertices are tried in ascending order and each
/// adjacency list is scanned in the order given, so callers that pass sorted
/// lists get a reproducible matching, not just a reproducible size.
BipartiteMatching hopcroft_karp(const BipartiteGraph& g);

}  // namespace qnet
