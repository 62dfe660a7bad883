#include "qnet/matching.hpp"

#include <algorithm>

#include "qnet/bipartite.hpp"

namespace qnet {

namespace {

void check_matching(const QDigraph& g, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    std::vector<bool> start(g.vertex_count()), end(g.vertex_count());
    for (auto [s, d] : edges) {
        if (s.index() >= g.vertex_count() || d.index() >= g.vertex_count())
            throw std::invalid_argument("matching edge endpoint out of range");
        if (!g.is_state(s) || !g.is_state(d))
            throw std::invalid_argument("matching edge " + g.label(s) + " -> " + g.label(d) +
                                        " is not between state vertices");
        if (!g.has_edge(s, d))
            throw std::invalid_argument("matching edge " + g.label(s) + " -> " + g.label(d) +
                                        " is not in the graph");
        if (start[s.index()]) throw std::invalid_argument("two matching edges start at " + g.label(s));
        if (end[d.index()]) throw std::invalid_argument("two matching edges end at " + g.label(d));
        start[s.index()] = true;
        end[d.index()] = true;
    }
}

}  // namespace

Matching::Matching(const QDigraph& g, std::vector<std::pair<VertexId, VertexId>> edges)
    : edges_(std::move(edges)) {
    check_matching(g, edges_);
    std::sort(edges_.begin(), edges_.end());
    for (auto [s, d] : edges_) matched_.push_back(d);
    std::sort(matched_.begin(), matched_.end());
}

bool Matching::is_matched(VertexId v) const {
    return std::binary_search(matched_.begin(), matched_.end(), v);
}

std::optional<VertexId> Matching::successor(VertexId v) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair(v, VertexId(0u)));
    if (it != edges_.end() && it->first == v) return it->second;
    return std::nullopt;
}

std::optional<VertexId> Matching::predecessor(VertexId v) const {
    for (auto [s, d] : edges_)
        if (d == v) return s;
    return std::nullopt;
}

Matching maximum_matching(const QDigraph& g) {
    const auto states = g.states();
    BipartiteGraph bg;
    bg.right_size = states.size();
    bg.adjacency.resize(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (VertexId w : g.successors(states[i]))
            bg.adjacency[i].push_back(static_cast<std::uint32_t>(g.state_slot(w)));
    }
    auto bm = hopcroft_karp(bg);

    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(bm.size);
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (bm.mate_of_left[i] != BipartiteMatching::kFree)
            edges.emplace_back(states[i], states[bm.mate_of_left[i]]);
    }
    return Matching(g, std::move(edges));
}

DriverAssignment minimum_drivers(const QDigraph& g) { return minimum_drivers(g, maximum_matching(g)); }

DriverAssignment minimum_drivers(const QDigraph& g, const Matching& m) {
    if (g.state_count() == 0) throw NetworkError("empty network");
    DriverAssignment d;
    for (VertexId v : g.states())
        if (!m.is_matched(v)) d.unmatched.push_back(v);
    d.n_d = std::max<std::size_t>(g.state_count() - m.size(), 1);
    if (d.unmatched.empty())
        d.chosen_drivers = {g.states().front()};
    else
        d.chosen_drivers = d.unmatched;
    return d;
}

MatchingDecomposition matching_decomposition(const QDigraph& g, const Matching& m) {
    check_matching(g, m.edges());

    const std::size_t n = g.vertex_count();
    constexpr std::size_t kNone = SIZE_MAX;
    std::vector<std::size_t> succ(n, kNone);
    std::vector<bool> has_pred(n, false), seen(n, false);
    for (auto [s, d] : m.edges()) {
        succ[s.index()] = d.index();
        has_pred[d.index()] = true;
    }

    MatchingDecomposition out;
    for (VertexId v : g.states()) {
        if (has_pred[v.index()]) continue;
        std::vector<VertexId> path;
        for (std::size_t x = v.index(); x != kNone; x = succ[x]) {
            path.emplace_back(x);
            seen[x] = true;
        }
        out.paths.push_back(std::move(path));
    }
    // Everything left has a predecessor and, the paths being exhausted, a
    // successor: it lies on a cycle.
    for (VertexId v : g.states()) {
        if (seen[v.index()]) continue;
        std::vector<VertexId> cycle;
        std::size_t x = v.index();
        do {
            cycle.emplace_back(x);
            seen[x] = true;
            x = succ[x];
        } while (x != v.index());
        out.cycles.push_back(std::move(cycle));
    }
    return out;
}

}  // namespace qnet
