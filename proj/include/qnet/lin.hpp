#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qnet/graph.hpp"
#include "qnet/matching.hpp"

namespace qnet {

struct Accessibility {
    std::vector<VertexId> accessible;    // ascending
    std::vector<VertexId> inaccessible;  // ascending
};

/// State vertices reachable from some driver vertex, and the rest.
Accessibility accessibility(const QDigraph& g);

/// A state set S whose in-neighbourhood T(S) (over state and driver
/// vertices) is strictly smaller than S.
struct Dilation {
    std::vector<VertexId> s_set;  // ascending
    std::vector<VertexId> t_set;  // ascending
};

/// T(S): every vertex with an edge into S.
std::vector<VertexId> in_neighbourhood(const QDigraph& g, std::span<const VertexId> s_set);

/// Size of a maximum matching between out-roles of V u U and in-roles of V.
/// A dilation exists iff this is smaller than N.
std::size_t input_matching_size(const QDigraph& g);

/// Hall violator for the input matching, or nullopt when every state
/// vertex can be given a distinct in-neighbour. The witness is the set of
/// in-roles reachable by alternating paths from the first unsaturated state
/// vertex, so |T(S)| = |S| - 1.
std::optional<Dilation> find_dilation(const QDigraph& g);

struct LinReport {
    std::vector<VertexId> accessible;
    std::vector<VertexId> inaccessible;
    std::optional<Dilation> dilation;
    bool controllable = false;
};

/// Structural controllability with the declared drivers: no inaccessible
/// vertex and no dilation.
LinReport lin_check(const QDigraph& g);

struct Bud {
    std::vector<VertexId> cycle;
    /// Ends in `cycle`, starts in the part of the cactus built before it.
    std::pair<VertexId, VertexId> entry_edge;
};

/// A stem hanging from `root` plus buds in attachment order. The stem lists
/// state vertices only; the first one is entered by a drive edge from the
/// root. An empty stem means the buds hang directly off the root.
struct Cactus {
    VertexId root;
    std::vector<VertexId> stem;
    std::vector<Bud> buds;

    std::size_t state_vertex_count() const;
};

struct CactusCover {
    std::vector<Cactus> cacti;
};

class NotControllableError : public NetworkError {
public:
    NotControllableError(const std::string& message, LinReport report)
        : NetworkError(message), report_(std::move(report)) {}
    const LinReport& report() const { return report_; }

private:
    LinReport report_;
};

/// A cover together with the network it spans, i.e. `g` plus whatever
/// drive edges (and fresh roots) were needed to realise the assignment.
struct ControlledCover {
    QDigraph network;
    CactusCover cover;
};

/// Build disjoint cacti from a maximum matching: one root per chosen driver
/// vertex (reusing a driver of `g` that already drives it, else a fresh
/// root), stems along matched paths, matched cycles attached as buds through
/// existing edges where possible and through an extra drive edge from the
/// first root otherwise.
///
/// Throws std::invalid_argument if `d` does not belong to `m`, and
/// NotControllableError if the resulting network fails lin_check.
ControlledCover build_cactus_cover(const QDigraph& g, const Matching& m, const DriverAssignment& d);

struct CoverCheck {
    bool ok = true;
    std::vector<std::string> violations;

    explicit operator bool() const { return ok; }
};

/// Checks every cactus clause against the edges of `g`, plus disjointness
/// and coverage of the state vertices.
CoverCheck verify_cactus_cover(const QDigraph& g, const CactusCover& cover);

}  // namespace qnet
