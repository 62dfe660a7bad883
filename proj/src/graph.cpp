#include "qnet/graph.hpp"

#include <algorithm>
#include <numeric>

namespace qnet {

std::string_view to_string(EdgeKind kind) {
    switch (kind) {
        case EdgeKind::Intrinsic: return "intrinsic";
        case EdgeKind::Entanglement: return "entanglement";
        case EdgeKind::Drive: return "drive";
    }
    return "intrinsic";
}

std::optional<EdgeKind> parse_edge_kind(std::string_view text) {
    if (text == "intrinsic") return EdgeKind::Intrinsic;
    if (text == "entanglement") return EdgeKind::Entanglement;
    if (text == "drive") return EdgeKind::Drive;
    return std::nullopt;
}

QDigraph::QDigraph(std::vector<Vertex> vertices, std::vector<Edge> edges, GraphOptions options)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), options_(options) {
    const std::size_t n = vertices_.size();
    slot_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& v = vertices_[i];
        if (v.label.empty()) throw NetworkError("vertex " + std::to_string(i) + " has an empty label");
        if (!by_label_.emplace(v.label, VertexId(i)).second)
            throw NetworkError("duplicate label \"" + v.label + "\"");
        if (v.role == VertexRole::State) {
            slot_[i] = states_.size();
            states_.emplace_back(i);
        } else {
            slot_[i] = drivers_.size();
            drivers_.emplace_back(i);
        }
    }

    for (const auto& e : edges_) {
        if (e.src.index() >= n || e.dst.index() >= n)
            throw NetworkError("edge endpoint out of range");
        const auto& s = vertices_[e.src.index()];
        const auto& d = vertices_[e.dst.index()];
        if (d.role == VertexRole::Driver)
            throw NetworkError("edge " + s.label + " -> " + d.label + " ends at driver vertex");
        if (e.kind == EdgeKind::Drive && s.role != VertexRole::Driver)
            throw NetworkError("drive edge " + s.label + " -> " + d.label + " starts at a state vertex");
        if (e.kind != EdgeKind::Drive && s.role == VertexRole::Driver)
            throw NetworkError("edge " + s.label + " -> " + d.label + " from a driver must be of kind drive");
        if (e.src == e.dst && !options_.allow_self_loops)
            throw NetworkError("self-loop on " + s.label + " not permitted");
    }

    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return std::pair(a.src, a.dst) < std::pair(b.src, b.dst);
    });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i].src == edges_[i - 1].src && edges_[i].dst == edges_[i - 1].dst)
            throw NetworkError("duplicate edge " + label(edges_[i].src) + " -> " + label(edges_[i].dst));
    }

    out_.assign(n, {});
    in_.assign(n, {});
    for (const auto& e : edges_) {
        out_[e.src.index()].push_back(e.dst);
        in_[e.dst.index()].push_back(e.src);
    }
    // out_ is already ascending because edges_ is sorted; in_ needs a pass.
    for (auto& preds : in_) std::sort(preds.begin(), preds.end());
}

std::optional<VertexId> QDigraph::find(std::string_view label) const {
    auto it = by_label_.find(std::string(label));
    if (it == by_label_.end()) return std::nullopt;
    return it->second;
}

VertexId QDigraph::at(std::string_view label) const {
    if (auto v = find(label)) return *v;
    throw NetworkError("unknown vertex \"" + std::string(label) + "\"");
}

std::size_t QDigraph::state_slot(VertexId v) const {
    if (!is_state(v)) throw NetworkError(label(v) + " is not a state vertex");
    return slot_[v.index()];
}

std::size_t QDigraph::driver_slot(VertexId v) const {
    if (!is_driver(v)) throw NetworkError(label(v) + " is not a driver vertex");
    return slot_[v.index()];
}

bool QDigraph::has_edge(VertexId src, VertexId dst) const {
    if (src.index() >= out_.size()) return false;
    const auto& succ = out_[src.index()];
    return std::binary_search(succ.begin(), succ.end(), dst);
}

std::optional<EdgeKind> QDigraph::edge_kind(VertexId src, VertexId dst) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair(src, dst),
                               [](const Edge& e, const std::pair<VertexId, VertexId>& key) {
                                   return std::pair(e.src, e.dst) < key;
                               });
    if (it == edges_.end() || it->src != src || it->dst != dst) return std::nullopt;
    return it->kind;
}

GraphBuilder::GraphBuilder(const QDigraph& g) : options_(g.options()) {
    for (const auto& v : g.vertices()) add_vertex(v.label, v.role);
    edges_.assign(g.edges().begin(), g.edges().end());
}

VertexId GraphBuilder::add_vertex(std::string label, VertexRole role) {
    if (label.empty()) throw NetworkError("empty vertex label");
    VertexId id(vertices_.size());
    if (!by_label_.emplace(label, id).second)
        throw NetworkError("duplicate label \"" + label + "\"");
    vertices_.push_back({std::move(label), role});
    return id;
}

VertexId GraphBuilder::add_state(std::string label) { return add_vertex(std::move(label), VertexRole::State); }
VertexId GraphBuilder::add_driver(std::string label) { return add_vertex(std::move(label), VertexRole::Driver); }

void GraphBuilder::add_edge(VertexId src, VertexId dst, EdgeKind kind) {
    edges_.push_back({src, dst, kind});
}

void GraphBuilder::add_edge(std::string_view src, std::string_view dst, std::optional<EdgeKind> kind) {
    auto s = find(src);
    if (!s) throw NetworkError("undeclared vertex \"" + std::string(src) + "\"");
    auto d = find(dst);
    if (!d) throw NetworkError("undeclared vertex \"" + std::string(dst) + "\"");
    EdgeKind k = kind.value_or(vertices_[s->index()].role == VertexRole::Driver ? EdgeKind::Drive
                                                                                 : EdgeKind::Intrinsic);
    add_edge(*s, *d, k);
}

std::optional<VertexId> GraphBuilder::find(std::string_view label) const {
    auto it = by_label_.find(std::string(label));
    if (it == by_label_.end()) return std::nullopt;
    return it->second;
}

QDigraph GraphBuilder::build() const { return QDigraph(vertices_, edges_, options_); }

std::size_t BoolMatrix::count() const {
    return static_cast<std::size_t>(std::count(data_.begin(), data_.end(), std::uint8_t{1}));
}

LtiInstance patterns(const QDigraph& g) {
    const std::size_t n = g.state_count();
    LtiInstance lti{BoolMatrix(n, n), BoolMatrix(n, g.driver_count())};
    for (const auto& e : g.edges()) {
        const std::size_t row = g.state_slot(e.dst);
        if (g.is_driver(e.src))
            lti.b_pattern.set(row, g.driver_slot(e.src));
        else
            lti.a_pattern.set(row, g.state_slot(e.src));
    }
    return lti;
}

QDigraph keep_drivers(const QDigraph& g, std::span<const VertexId> drivers) {
    std::vector<bool> keep(g.vertex_count(), true);
    for (VertexId d : g.drivers()) keep[d.index()] = false;
    for (VertexId d : drivers) keep.at(d.index()) = true;

    GraphBuilder b(g.options());
    std::vector<VertexId> remap(g.vertex_count());
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        if (!keep[i]) continue;
        const auto& v = g.vertices()[i];
        remap[i] = v.role == VertexRole::State ? b.add_state(v.label) : b.add_driver(v.label);
    }
    for (const auto& e : g.edges())
        if (keep[e.src.index()]) b.add_edge(remap[e.src.index()], remap[e.dst.index()], e.kind);
    return b.build();
}

std::vector<std::vector<VertexId>> state_components(const QDigraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto root = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges()) {
        if (!g.is_state(e.src)) continue;
        auto a = root(e.src.index());
        auto b = root(e.dst.index());
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::vector<VertexId>> comps;
    std::vector<std::size_t> comp_of(n, n);
    for (VertexId v : g.states()) {
        auto r = root(v.index());
        if (comp_of[r] == n) {
            comp_of[r] = comps.size();
            comps.emplace_back();
        }
        comps[comp_of[r]].push_back(v);
    }
    return comps;
}

}  // namespace qnet
