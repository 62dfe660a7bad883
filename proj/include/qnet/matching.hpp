#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qnet/graph.hpp"

namespace qnet {

/// A set of state-state edges with no shared start and no shared end.
/// A vertex is matched when it is the end of a matching edge.
class Matching {
public:
    Matching() = default;
    /// Validates the matching property against `g`; throws std::invalid_argument.
    Matching(const QDigraph& g, std::vector<std::pair<VertexId, VertexId>> edges);

    /// Sorted by (src, dst).
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
    /// M.
    std::size_t size() const { return edges_.size(); }
    /// Ascending.
    const std::vector<VertexId>& matched_vertices() const { return matched_; }

    bool is_matched(VertexId v) const;
    std::optional<VertexId> successor(VertexId v) const;
    std::optional<VertexId> predecessor(VertexId v) const;

private:
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<VertexId> matched_;
};

/// Minimum driver placement derived from a maximum matching.
struct DriverAssignment {
    std::size_t n_d = 0;
    std::vector<VertexId> unmatched;       // ascending
    std::vector<VertexId> chosen_drivers;  // ascending
};

/// Maximum matching over state-state edges, computed on the bipartite double
/// cover (left = out-roles, right = in-roles). Self-loops are legal matching
/// edges. The result is deterministic for a given graph.
Matching maximum_matching(const QDigraph& g);

/// N_D = max(N - M, 1) with drivers at the unmatched vertices, or at the
/// lowest-index vertex when everything is matched.
/// Throws NetworkError for a graph without state vertices.
DriverAssignment minimum_drivers(const QDigraph& g);
DriverAssignment minimum_drivers(const QDigraph& g, const Matching& m);

struct MatchingDecomposition {
    /// Each path starts at an unmatched vertex; single vertices are paths too.
    std::vector<std::vector<VertexId>> paths;
    /// Each cycle starts at its lowest-index vertex; a self-loop is a 1-cycle.
    std::vector<std::vector<VertexId>> cycles;
};

/// Split the state vertices into the vertex-disjoint elementary paths and
/// cycles traced by the matching edges. Throws std::invalid_argument when `m`
/// is not a matching of `g`.
MatchingDecomposition matching_decomposition(const QDigraph& g, const Matching& m);

}  // namespace qnet
