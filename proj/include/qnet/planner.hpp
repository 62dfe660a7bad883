#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qnet/graph.hpp"

namespace qnet {

enum class AugmentReason : std::uint8_t { ClosePath, SpliceSingleton, Accessibility };

std::string_view to_string(AugmentReason reason);
std::optional<AugmentReason> parse_augment_reason(std::string_view text);

struct PlannedEdge {
    std::string src;
    std::string dst;
    AugmentReason reason = AugmentReason::ClosePath;

    friend bool operator==(const PlannedEdge&, const PlannedEdge&) = default;
};

/// Entanglement edges that leave the network controllable from one root.
/// Vertices are referenced by label so a plan can be stored and replayed.
struct AugmentationPlan {
    std::vector<PlannedEdge> added_edges;
    std::string root;        // driver label; created by apply_plan if absent
    std::string attachment;  // state vertex receiving the root's drive edge
    std::size_t n = 0;       // state vertex count of the planned network

    /// |added_edges| * N^3.
    std::uint64_t locc_cost_bound() const;

    friend bool operator==(const AugmentationPlan&, const AugmentationPlan&) = default;
};

/// Raised when the input network is not weakly connected.
class DisconnectedNetworkError : public NetworkError {
public:
    DisconnectedNetworkError(const std::string& message, std::vector<std::vector<std::string>> components)
        : NetworkError(message), components_(std::move(components)) {}
    const std::vector<std::vector<std::string>>& components() const { return components_; }

private:
    std::vector<std::vector<std::string>> components_;
};

/// Three phases over the maximum matching:
///   1. close every matched path of two or more vertices v1 -> ... -> vk
///      with an edge vk -> v1;
///   2. splice every unmatched isolated vertex into an adjacent cycle
///      (falling back to a 2-cycle with a neighbour);
///   3. attach the root to the lowest-index state vertex and, while some
///      vertex is inaccessible, pick a border vertex b with an edge b -> a
///      into the accessible part and add a -> b.
/// The root is the first declared driver if there is one, else a fresh "U<k>".
///
/// Throws NetworkError for an empty network, DisconnectedNetworkError when
/// the state vertices are not weakly connected, and std::logic_error if the
/// postcondition (N_D = 1, lin_check passes from the root alone) fails.
AugmentationPlan plan_augmentation(const QDigraph& g);

/// g plus the planned entanglement edges plus the root's drive edge (the
/// root is created if missing; an existing drive edge is reused).
/// Throws NetworkError for unknown vertices or already present edges.
QDigraph apply_plan(const QDigraph& g, const AugmentationPlan& plan);

/// Line format: `root <driver> <attachment>`, `add <src> <dst> entanglement <reason>`.
std::string plan_to_text(const AugmentationPlan& plan);
/// Inverse of plan_to_text; `#` comments allowed. Throws ParseError.
AugmentationPlan parse_plan(std::string_view text);

struct SupervertexMap {
    std::vector<std::string> merged;  // original labels, in cycle order
    std::string representative;
};

/// Merge an elementary cycle into a single vertex. The representative takes
/// the position of the lowest-index merged vertex and carries a self-loop
/// standing in for the cycle's internal dynamics; all other edges touching
/// the cycle are re-terminated at it, duplicates collapsed.
/// Throws NetworkError if `cycle` is not an elementary cycle of state vertices of g.
std::pair<QDigraph, SupervertexMap> contract_supervertex(const QDigraph& g, const std::vector<VertexId>& cycle);

/// "V2-6" for {V6, V5, V4, V2}: shared prefix plus the smallest and largest
/// numeric suffix; otherwise the lowest and highest labels joined with '-'.
std::string supervertex_label(const std::vector<std::string>& labels);

}  // namespace qnet
