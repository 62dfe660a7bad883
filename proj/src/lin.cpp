#include "qnet/lin.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "qnet/bipartite.hpp"

namespace qnet {

namespace {

BipartiteGraph input_bipartite(const QDigraph& g) {
    BipartiteGraph bg;
    bg.right_size = g.state_count();
    bg.adjacency.resize(g.vertex_count());
    for (const auto& e : g.edges())
        bg.adjacency[e.src.index()].push_back(static_cast<std::uint32_t>(g.state_slot(e.dst)));
    return bg;
}

std::string fresh_driver_label(const GraphBuilder& b) {
    for (std::size_t k = 1;; ++k) {
        std::string label = "U" + std::to_string(k);
        if (!b.contains(label)) return label;
    }
}

}  // namespace

Accessibility accessibility(const QDigraph& g) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::deque<VertexId> queue;
    for (VertexId d : g.drivers()) {
        seen[d.index()] = true;
        queue.push_back(d);
    }
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (VertexId w : g.successors(v)) {
            if (!seen[w.index()]) {
                seen[w.index()] = true;
                queue.push_back(w);
            }
        }
    }
    Accessibility out;
    for (VertexId v : g.states()) (seen[v.index()] ? out.accessible : out.inaccessible).push_back(v);
    return out;
}

std::vector<VertexId> in_neighbourhood(const QDigraph& g, std::span<const VertexId> s_set) {
    std::set<VertexId> t;
    for (VertexId s : s_set)
        for (VertexId w : g.predecessors(s)) t.insert(w);
    return {t.begin(), t.end()};
}

std::size_t input_matching_size(const QDigraph& g) { return hopcroft_karp(input_bipartite(g)).size; }

std::optional<Dilation> find_dilation(const QDigraph& g) {
    const auto bm = hopcroft_karp(input_bipartite(g));
    if (bm.size == g.state_count()) return std::nullopt;

    const auto states = g.states();
    std::size_t start = 0;
    while (bm.mate_of_right[start] != BipartiteMatching::kFree) ++start;

    std::vector<bool> in_s(states.size(), false), in_t(g.vertex_count(), false);
    std::deque<std::size_t> queue{start};
    in_s[start] = true;
    while (!queue.empty()) {
        auto slot = queue.front();
        queue.pop_front();
        for (VertexId w : g.predecessors(states[slot])) {
            if (in_t[w.index()]) continue;
            in_t[w.index()] = true;
            // w is saturated, otherwise the matching would not be maximum.
            auto next = bm.mate_of_left[w.index()];
            if (next == BipartiteMatching::kFree)
                throw std::logic_error("find_dilation: augmenting path in a maximum matching");
            if (!in_s[next]) {
                in_s[next] = true;
                queue.push_back(next);
            }
        }
    }

    Dilation d;
    for (std::size_t i = 0; i < states.size(); ++i)
        if (in_s[i]) d.s_set.push_back(states[i]);
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        if (in_t[i]) d.t_set.emplace_back(i);
    return d;
}

LinReport lin_check(const QDigraph& g) {
    auto acc = accessibility(g);
    LinReport r;
    r.accessible = std::move(acc.accessible);
    r.inaccessible = std::move(acc.inaccessible);
    r.dilation = find_dilation(g);
    r.controllable = r.inaccessible.empty() && !r.dilation;
    return r;
}

std::size_t Cactus::state_vertex_count() const {
    std::size_t n = stem.size();
    for (const auto& b : buds) n += b.cycle.size();
    return n;
}

ControlledCover build_cactus_cover(const QDigraph& g, const Matching& m, const DriverAssignment& d) {
    const auto expected = minimum_drivers(g, m);
    if (expected.unmatched != d.unmatched || expected.chosen_drivers != d.chosen_drivers ||
        expected.n_d != d.n_d)
        throw std::invalid_argument("driver assignment does not belong to the given matching");

    const auto parts = matching_decomposition(g, m);
    const std::size_t n = g.vertex_count();

    GraphBuilder builder(g);
    CactusCover cover;
    constexpr std::size_t kNone = SIZE_MAX;
    // Index of the cactus a vertex was placed in (roots included).
    std::vector<std::size_t> owner(n, kNone);
    std::vector<bool> root_used(n, false);

    std::vector<std::size_t> cycle_of(n, kNone);
    for (std::size_t c = 0; c < parts.cycles.size(); ++c)
        for (VertexId v : parts.cycles[c]) cycle_of[v.index()] = c;
    std::vector<bool> cycle_placed(parts.cycles.size(), false);

    for (VertexId v : d.chosen_drivers) {
        std::optional<VertexId> root;
        for (VertexId p : g.predecessors(v)) {
            if (g.is_driver(p) && !root_used[p.index()]) {
                root = p;
                break;
            }
        }
        VertexId r;
        if (root) {
            r = *root;
        } else {
            r = builder.add_driver(fresh_driver_label(builder));
            builder.add_edge(r, v, EdgeKind::Drive);
        }
        if (r.index() >= owner.size()) {
            owner.resize(r.index() + 1, kNone);
            root_used.resize(r.index() + 1, false);
        }
        root_used[r.index()] = true;

        const std::size_t id = cover.cacti.size();
        Cactus cactus{r, {}, {}};
        owner[r.index()] = id;
        if (cycle_of[v.index()] == kNone) {
            auto path = std::find_if(parts.paths.begin(), parts.paths.end(),
                                     [&](const auto& p) { return p.front() == v; });
            if (path == parts.paths.end())
                throw std::invalid_argument("driver vertex " + g.label(v) + " does not start a matched path");
            cactus.stem = *path;
            for (VertexId x : cactus.stem) owner[x.index()] = id;
        } else {
            const auto c = cycle_of[v.index()];
            cactus.buds.push_back({parts.cycles[c], {r, v}});
            cycle_placed[c] = true;
            for (VertexId x : parts.cycles[c]) owner[x.index()] = id;
        }
        cover.cacti.push_back(std::move(cactus));
    }

    // Hang matched cycles off whatever is already placed, through the
    // smallest available (src, dst) edge. A cycle nothing reaches gets a
    // drive edge from the first root, then attachment resumes.
    auto attach_pass = [&] {
        bool progress = false;
        for (std::size_t c = 0; c < parts.cycles.size(); ++c) {
            if (cycle_placed[c]) continue;
            std::optional<std::pair<VertexId, VertexId>> entry;
            for (VertexId v : parts.cycles[c]) {
                for (VertexId p : g.predecessors(v)) {
                    if (p.index() < owner.size() && owner[p.index()] != kNone) {
                        std::pair<VertexId, VertexId> cand{p, v};
                        if (!entry || cand < *entry) entry = cand;
                        break;
                    }
                }
            }
            if (!entry) continue;
            const auto id = owner[entry->first.index()];
            cover.cacti[id].buds.push_back({parts.cycles[c], *entry});
            for (VertexId x : parts.cycles[c]) owner[x.index()] = id;
            cycle_placed[c] = true;
            progress = true;
        }
        return progress;
    };

    for (;;) {
        while (attach_pass()) {
        }
        auto c = std::find(cycle_placed.begin(), cycle_placed.end(), false);
        if (c == cycle_placed.end()) break;
        const auto ci = static_cast<std::size_t>(c - cycle_placed.begin());
        auto& host = cover.cacti.front();
        VertexId target = parts.cycles[ci].front();
        builder.add_edge(host.root, target, EdgeKind::Drive);
        host.buds.push_back({parts.cycles[ci], {host.root, target}});
        for (VertexId x : parts.cycles[ci]) owner[x.index()] = 0;
        cycle_placed[ci] = true;
    }

    ControlledCover out{builder.build(), std::move(cover)};
    auto report = lin_check(out.network);
    if (!report.controllable)
        throw NotControllableError("network is not structurally controllable with the given drivers",
                                   std::move(report));
    if (auto check = verify_cactus_cover(out.network, out.cover); !check) {
        std::string msg = "constructed cactus cover failed verification:";
        for (const auto& v : check.violations) msg += " " + v + ";";
        throw std::logic_error(msg);
    }
    return out;
}

CoverCheck verify_cactus_cover(const QDigraph& g, const CactusCover& cover) {
    CoverCheck check;
    auto fail = [&](std::string msg) {
        check.ok = false;
        check.violations.push_back(std::move(msg));
    };
    auto valid = [&](VertexId v) { return v.index() < g.vertex_count(); };
    auto name = [&](VertexId v) { return valid(v) ? g.label(v) : "#" + std::to_string(v.index()); };

    std::vector<int> covered(g.vertex_count(), 0);
    std::set<VertexId> roots;

    for (std::size_t ci = 0; ci < cover.cacti.size(); ++ci) {
        const auto& cactus = cover.cacti[ci];
        const std::string where = "cactus " + std::to_string(ci);
        if (!valid(cactus.root) || !g.is_driver(cactus.root)) {
            fail(where + ": root " + name(cactus.root) + " is not a driver vertex");
            continue;
        }
        if (!roots.insert(cactus.root).second) fail(where + ": root " + name(cactus.root) + " shared");

        std::set<VertexId> built{cactus.root};
        auto place = [&](VertexId v) {
            if (!valid(v) || !g.is_state(v)) {
                fail(where + ": " + name(v) + " is not a state vertex");
                return false;
            }
            if (!built.insert(v).second) fail(where + ": vertex " + name(v) + " repeated");
            ++covered[v.index()];
            return true;
        };

        if (!cactus.stem.empty()) {
            if (valid(cactus.stem.front()) &&
                g.edge_kind(cactus.root, cactus.stem.front()) != EdgeKind::Drive)
                fail(where + ": no drive edge " + name(cactus.root) + " -> " + name(cactus.stem.front()));
            for (std::size_t i = 0; i < cactus.stem.size(); ++i) {
                if (!place(cactus.stem[i])) continue;
                if (i > 0 && !g.has_edge(cactus.stem[i - 1], cactus.stem[i]))
                    fail(where + ": stem edge " + name(cactus.stem[i - 1]) + " -> " + name(cactus.stem[i]) +
                         " missing");
            }
        }

        for (std::size_t bi = 0; bi < cactus.buds.size(); ++bi) {
            const auto& bud = cactus.buds[bi];
            const std::string bw = where + " bud " + std::to_string(bi);
            if (bud.cycle.empty()) {
                fail(bw + ": empty cycle");
                continue;
            }
            auto [src, dst] = bud.entry_edge;
            const bool ends_in = std::find(bud.cycle.begin(), bud.cycle.end(), dst) != bud.cycle.end();
            const bool starts_in = std::find(bud.cycle.begin(), bud.cycle.end(), src) != bud.cycle.end();
            if (!ends_in) fail(bw + ": entry edge does not end in the cycle");
            if (starts_in) fail(bw + ": entry edge begins in the cycle");
            if (!built.contains(src)) fail(bw + ": entry edge source " + name(src) + " not yet in the cactus");
            if (!valid(src) || !valid(dst) || !g.has_edge(src, dst))
                fail(bw + ": entry edge " + name(src) + " -> " + name(dst) + " missing");
            for (std::size_t i = 0; i < bud.cycle.size(); ++i) {
                VertexId a = bud.cycle[i];
                VertexId b = bud.cycle[(i + 1) % bud.cycle.size()];
                if (!place(a)) continue;
                if (!valid(b) || !g.has_edge(a, b))
                    fail(bw + ": cycle edge " + name(a) + " -> " + name(b) + " missing");
            }
        }
    }

    for (VertexId v : g.states()) {
        if (covered[v.index()] == 0) fail("state vertex " + g.label(v) + " not covered");
        if (covered[v.index()] > 1) fail("state vertex " + g.label(v) + " covered more than once");
    }
    return check;
}

}  // namespace qnet
