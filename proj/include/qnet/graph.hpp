#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qnet {

/// Dense index of a vertex in a QDigraph (state and driver vertices share
/// one index space, assigned in declaration order).
struct VertexId {
    std::uint32_t value = 0;

    constexpr VertexId() = default;
    constexpr explicit VertexId(std::uint32_t v) : value(v) {}
    constexpr explicit VertexId(std::size_t v) : value(static_cast<std::uint32_t>(v)) {}
    constexpr explicit VertexId(int v) : value(static_cast<std::uint32_t>(v)) {}

    constexpr std::size_t index() const { return value; }
    friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

enum class VertexRole : std::uint8_t { State, Driver };

enum class EdgeKind : std::uint8_t { Intrinsic, Entanglement, Drive };

std::string_view to_string(EdgeKind kind);
std::optional<EdgeKind> parse_edge_kind(std::string_view text);

struct Edge {
    VertexId src;
    VertexId dst;
    EdgeKind kind = EdgeKind::Intrinsic;

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Vertex {
    std::string label;
    VertexRole role = VertexRole::State;
};

/// Raised for any structurally invalid network (bad labels, dangling
/// endpoints, kind violations, duplicate edges).
class NetworkError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GraphOptions {
    bool allow_self_loops = true;
};

/// Directed network with state vertices, driver vertices and typed edges.
///
/// Immutable once constructed. Edges are kept sorted by (src, dst); every
/// accessor returns views into that canonical order, so two graphs built
/// from permutations of the same edge list compare equal.
class QDigraph {
public:
    QDigraph() = default;
    QDigraph(std::vector<Vertex> vertices, std::vector<Edge> edges,
             GraphOptions options = {});

    std::size_t vertex_count() const { return vertices_.size(); }
    /// N: number of state vertices.
    std::size_t state_count() const { return states_.size(); }
    /// N_U: number of driver vertices.
    std::size_t driver_count() const { return drivers_.size(); }

    std::span<const Vertex> vertices() const { return vertices_; }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const VertexId> states() const { return states_; }
    std::span<const VertexId> drivers() const { return drivers_; }

    const std::string& label(VertexId v) const { return vertices_.at(v.index()).label; }
    VertexRole role(VertexId v) const { return vertices_.at(v.index()).role; }
    bool is_state(VertexId v) const { return role(v) == VertexRole::State; }
    bool is_driver(VertexId v) const { return role(v) == VertexRole::Driver; }

    std::optional<VertexId> find(std::string_view label) const;
    /// Like find() but throws NetworkError for an unknown label.
    VertexId at(std::string_view label) const;

    /// Position of a state vertex within states() (row of the A matrix).
    std::size_t state_slot(VertexId v) const;
    /// Position of a driver vertex within drivers() (column of the B matrix).
    std::size_t driver_slot(VertexId v) const;

    /// Out/in neighbours in ascending index order.
    std::span<const VertexId> successors(VertexId v) const { return out_.at(v.index()); }
    std::span<const VertexId> predecessors(VertexId v) const { return in_.at(v.index()); }

    bool has_edge(VertexId src, VertexId dst) const;
    std::optional<EdgeKind> edge_kind(VertexId src, VertexId dst) const;

    const GraphOptions& options() const { return options_; }

    friend bool operator==(const QDigraph& a, const QDigraph& b) {
        return a.vertices_.size() == b.vertices_.size() &&
               std::equal(a.vertices_.begin(), a.vertices_.end(), b.vertices_.begin(),
                          [](const Vertex& x, const Vertex& y) {
                              return x.label == y.label && x.role == y.role;
                          }) &&
               a.edges_ == b.edges_;
    }

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<VertexId> states_;
    std::vector<VertexId> drivers_;
    std::vector<std::size_t> slot_;
    std::vector<std::vector<VertexId>> out_;
    std::vector<std::vector<VertexId>> in_;
    std::unordered_map<std::string, VertexId> by_label_;
    GraphOptions options_;
};

/// Incremental construction helper; validation happens in build().
class GraphBuilder {
public:
    explicit GraphBuilder(GraphOptions options = {}) : options_(options) {}
    /// Start from an existing graph (all vertices and edges copied).
    explicit GraphBuilder(const QDigraph& g);

    VertexId add_state(std::string label);
    VertexId add_driver(std::string label);
    void add_edge(VertexId src, VertexId dst, EdgeKind kind);
    /// Kind defaults to Drive when src is a driver, else Intrinsic.
    void add_edge(std::string_view src, std::string_view dst,
                  std::optional<EdgeKind> kind = std::nullopt);

    bool contains(std::string_view label) const { return by_label_.contains(std::string(label)); }
    std::optional<VertexId> find(std::string_view label) const;
    VertexRole role(VertexId v) const { return vertices_.at(v.index()).role; }

    QDigraph build() const;

private:
    VertexId add_vertex(std::string label, VertexRole role);

    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, VertexId> by_label_;
    GraphOptions options_;
};

/// Dense row-major boolean matrix.
class BoolMatrix {
public:
    BoolMatrix() = default;
    BoolMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c] != 0; }
    void set(std::size_t r, std::size_t c, bool value = true) { data_[r * cols_ + c] = value ? 1 : 0; }
    std::size_t count() const;

    friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> data_;
};

/// Zero/nonzero structure of (A, B) in x' = A x + B u.
struct LtiInstance {
    /// N x N; (v, u) set iff there is an edge u -> v between state vertices.
    BoolMatrix a_pattern;
    /// N x N_U; (v, d) set iff there is a drive edge d -> v.
    BoolMatrix b_pattern;

    friend bool operator==(const LtiInstance&, const LtiInstance&) = default;
};

LtiInstance patterns(const QDigraph& g);

/// Copy of `g` keeping only the listed driver vertices (and their edges).
QDigraph keep_drivers(const QDigraph& g, std::span<const VertexId> drivers);

/// Weakly connected components over state vertices and state-state edges.
/// Each component is sorted; components are ordered by their first vertex.
std::vector<std::vector<VertexId>> state_components(const QDigraph& g);

}  // namespace qnet
