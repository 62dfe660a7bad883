#include "qnet/planner.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "qnet/lin.hpp"
#include "qnet/matching.hpp"
#include "qnet/network_io.hpp"

namespace qnet {

std::string_view to_string(AugmentReason reason) {
    switch (reason) {
        case AugmentReason::ClosePath: return "close-path";
        case AugmentReason::SpliceSingleton: return "splice-singleton";
        case AugmentReason::Accessibility: return "accessibility";
    }
    return "close-path";
}

std::optional<AugmentReason> parse_augment_reason(std::string_view text) {
    if (text == "close-path") return AugmentReason::ClosePath;
    if (text == "splice-singleton") return AugmentReason::SpliceSingleton;
    if (text == "accessibility") return AugmentReason::Accessibility;
    return std::nullopt;
}

std::uint64_t AugmentationPlan::locc_cost_bound() const {
    const std::uint64_t n3 = static_cast<std::uint64_t>(n) * n * n;
    return added_edges.size() * n3;
}

namespace {

using EdgeSet = std::set<std::pair<VertexId, VertexId>>;

class Planner {
public:
    explicit Planner(const QDigraph& g) : g_(g), succ_(g.vertex_count()), pred_(g.vertex_count()) {
        for (const auto& e : g.edges())
            if (g.is_state(e.src)) edges_.insert({e.src, e.dst});
    }

    AugmentationPlan run() {
        const auto m = maximum_matching(g_);
        const auto parts = matching_decomposition(g_, m);

        for (const auto& c : parts.cycles)
            for (std::size_t i = 0; i < c.size(); ++i) link(c[i], c[(i + 1) % c.size()]);

        std::vector<VertexId> singletons;
        for (const auto& p : parts.paths) {
            if (p.size() == 1) {
                singletons.push_back(p.front());
                continue;
            }
            for (std::size_t i = 0; i + 1 < p.size(); ++i) link(p[i], p[i + 1]);
            add(p.back(), p.front(), AugmentReason::ClosePath);
            link(p.back(), p.front());
        }

        if (g_.state_count() > 1)
            for (VertexId v : singletons) splice(v);

        plan_.root = root_label();
        const VertexId attachment = g_.states().front();
        plan_.attachment = g_.label(attachment);
        repair_accessibility(attachment);

        plan_.n = g_.state_count();
        return std::move(plan_);
    }

private:
    bool on_cycle(VertexId v) const { return succ_[v.index()].has_value(); }

    void link(VertexId a, VertexId b) {
        succ_[a.index()] = b;
        pred_[b.index()] = a;
    }

    void add(VertexId a, VertexId b, AugmentReason reason) {
        if (!edges_.insert({a, b}).second) return;
        plan_.added_edges.push_back({g_.label(a), g_.label(b), reason});
    }

    std::vector<VertexId> neighbours(VertexId v) const {
        std::set<VertexId> out;
        for (const auto& [a, b] : edges_) {
            if (a == v && b != v) out.insert(b);
            if (b == v && a != v) out.insert(a);
        }
        return {out.begin(), out.end()};
    }

    void splice(VertexId v) {
        const auto nbrs = neighbours(v);
        for (VertexId x : nbrs) {
            if (!on_cycle(x)) continue;
            if (edges_.contains({x, v})) {
                // x -> v -> succ(x)
                VertexId w = *succ_[x.index()];
                add(v, w, AugmentReason::SpliceSingleton);
                link(x, v);
                link(v, w);
            } else {
                // pred(x) -> v -> x
                VertexId u = *pred_[x.index()];
                add(u, v, AugmentReason::SpliceSingleton);
                link(u, v);
                link(v, x);
            }
            return;
        }
        // No neighbour on a cycle yet: pair with the lowest-index neighbour.
        for (VertexId y : nbrs) {
            add(v, y, AugmentReason::SpliceSingleton);
            add(y, v, AugmentReason::SpliceSingleton);
            link(v, y);
            link(y, v);
            return;
        }
    }

    std::string root_label() {
        if (!g_.drivers().empty()) {
            root_ = g_.drivers().front();
            return g_.label(*root_);
        }
        for (std::size_t k = 1;; ++k) {
            std::string label = "U" + std::to_string(k);
            if (!g_.find(label)) return label;
        }
    }

    void repair_accessibility(VertexId attachment) {
        std::vector<bool> reached(g_.vertex_count(), false);
        std::deque<VertexId> queue;
        auto visit = [&](VertexId v) {
            if (reached[v.index()]) return;
            reached[v.index()] = true;
            queue.push_back(v);
        };
        auto flood = [&] {
            while (!queue.empty()) {
                VertexId v = queue.front();
                queue.pop_front();
                for (auto it = edges_.lower_bound({v, VertexId(0u)}); it != edges_.end() && it->first == v; ++it)
                    visit(it->second);
            }
        };

        visit(attachment);
        if (root_)
            for (VertexId w : g_.successors(*root_)) visit(w);
        flood();

        for (;;) {
            std::optional<std::pair<VertexId, VertexId>> border;
            for (VertexId b : g_.states()) {
                if (reached[b.index()]) continue;
                for (auto it = edges_.lower_bound({b, VertexId(0u)}); it != edges_.end() && it->first == b; ++it) {
                    if (reached[it->second.index()]) {
                        border = std::pair(b, it->second);
                        break;
                    }
                }
                if (border) break;
            }
            if (!border) break;
            auto [b, a] = *border;
            add(a, b, AugmentReason::Accessibility);
            visit(b);
            flood();
        }
    }

    const QDigraph& g_;
    EdgeSet edges_;
    std::vector<std::optional<VertexId>> succ_;
    std::vector<std::optional<VertexId>> pred_;
    std::optional<VertexId> root_;
    AugmentationPlan plan_;
};

}  // namespace

AugmentationPlan plan_augmentation(const QDigraph& g) {
    if (g.state_count() == 0) throw NetworkError("empty network");
    const auto comps = state_components(g);
    if (comps.size() > 1) {
        std::vector<std::vector<std::string>> labels;
        std::string msg = "network is disconnected (" + std::to_string(comps.size()) + " components):";
        for (const auto& c : comps) {
            labels.emplace_back();
            msg += " {";
            for (std::size_t i = 0; i < c.size(); ++i) {
                labels.back().push_back(g.label(c[i]));
                msg += (i ? " " : "") + g.label(c[i]);
            }
            msg += "}";
        }
        throw DisconnectedNetworkError(msg, std::move(labels));
    }

    auto plan = Planner(g).run();

    const auto applied = apply_plan(g, plan);
    const VertexId root = applied.at(plan.root);
    const auto single = keep_drivers(applied, std::span<const VertexId>(&root, 1));
    if (minimum_drivers(single).n_d != 1 || !lin_check(single).controllable)
        throw std::logic_error("augmentation plan failed its postcondition");
    return plan;
}

QDigraph apply_plan(const QDigraph& g, const AugmentationPlan& plan) {
    GraphBuilder b(g);
    auto state = [&](const std::string& label) {
        auto v = g.find(label);
        if (!v) throw NetworkError("plan references unknown vertex \"" + label + "\"");
        if (!g.is_state(*v)) throw NetworkError("plan vertex \"" + label + "\" is not a state vertex");
        return *v;
    };

    for (const auto& e : plan.added_edges) {
        VertexId s = state(e.src), d = state(e.dst);
        if (g.has_edge(s, d)) throw NetworkError("edge " + e.src + " -> " + e.dst + " already present");
        b.add_edge(s, d, EdgeKind::Entanglement);
    }

    const VertexId target = state(plan.attachment);
    VertexId root;
    if (auto r = g.find(plan.root)) {
        if (!g.is_driver(*r)) throw NetworkError("plan root \"" + plan.root + "\" is not a driver vertex");
        root = *r;
    } else {
        root = b.add_driver(plan.root);
    }
    if (root.index() >= g.vertex_count() || !g.has_edge(root, target)) b.add_edge(root, target, EdgeKind::Drive);
    return b.build();
}

std::string plan_to_text(const AugmentationPlan& plan) {
    std::ostringstream out;
    out << "root " << plan.root << ' ' << plan.attachment << '\n';
    for (const auto& e : plan.added_edges)
        out << "add " << e.src << ' ' << e.dst << " entanglement " << to_string(e.reason) << '\n';
    return out.str();
}

AugmentationPlan parse_plan(std::string_view text) {
    AugmentationPlan plan;
    bool have_root = false;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok[0] == "root") {
            if (tok.size() != 3) throw ParseError(lineno, "expected `root <driver> <attachment>`");
            if (have_root) throw ParseError(lineno, "duplicate root line");
            plan.root = tok[1];
            plan.attachment = tok[2];
            have_root = true;
        } else if (tok[0] == "add") {
            if (tok.size() != 5 || tok[3] != "entanglement")
                throw ParseError(lineno, "expected `add <src> <dst> entanglement <reason>`");
            auto reason = parse_augment_reason(tok[4]);
            if (!reason) throw ParseError(lineno, "unknown reason \"" + tok[4] + "\"");
            plan.added_edges.push_back({tok[1], tok[2], *reason});
        } else {
            throw ParseError(lineno, "unknown directive \"" + tok[0] + "\"");
        }
    }
    if (!have_root) throw ParseError(0, "plan has no root line");
    return plan;
}

std::string supervertex_label(const std::vector<std::string>& labels) {
    if (labels.empty()) return {};
    struct Split {
        std::string prefix;
        std::string digits;
    };
    std::vector<Split> parts;
    bool numeric = true;
    for (const auto& l : labels) {
        std::size_t i = l.size();
        while (i > 0 && std::isdigit(static_cast<unsigned char>(l[i - 1]))) --i;
        parts.push_back({l.substr(0, i), l.substr(i)});
        if (i == l.size() || parts.back().prefix != parts.front().prefix) numeric = false;
    }
    if (numeric) {
        auto num_less = [](const Split& a, const Split& b) {
            auto strip = [](const std::string& s) {
                auto p = s.find_first_not_of('0');
                return p == std::string::npos ? std::string("0") : s.substr(p);
            };
            auto x = strip(a.digits), y = strip(b.digits);
            return x.size() != y.size() ? x.size() < y.size() : x < y;
        };
        auto [lo, hi] = std::minmax_element(parts.begin(), parts.end(), num_less);
        if (lo->digits == hi->digits) return lo->prefix + lo->digits;
        return lo->prefix + lo->digits + "-" + hi->digits;
    }
    auto [lo, hi] = std::minmax_element(labels.begin(), labels.end());
    return *lo == *hi ? *lo : *lo + "-" + *hi;
}

std::pair<QDigraph, SupervertexMap> contract_supervertex(const QDigraph& g, const std::vector<VertexId>& cycle) {
    if (cycle.empty()) throw NetworkError("cannot contract an empty vertex sequence");
    std::vector<bool> merged(g.vertex_count(), false);
    SupervertexMap map;
    bool entangled = false;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        VertexId v = cycle[i];
        if (v.index() >= g.vertex_count() || !g.is_state(v))
            throw NetworkError("supervertex member is not a state vertex");
        if (merged[v.index()]) throw NetworkError("vertex " + g.label(v) + " repeated in cycle");
        merged[v.index()] = true;
        map.merged.push_back(g.label(v));
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        VertexId a = cycle[i], b = cycle[(i + 1) % cycle.size()];
        auto kind = g.edge_kind(a, b);
        if (!kind) throw NetworkError("not an elementary cycle: edge " + g.label(a) + " -> " + g.label(b) + " missing");
        entangled = entangled || *kind == EdgeKind::Entanglement;
    }

    map.representative = supervertex_label(map.merged);
    while (auto clash = g.find(map.representative)) {
        if (merged[clash->index()]) break;
        map.representative += "'";
    }

    const VertexId anchor = *std::min_element(cycle.begin(), cycle.end());
    GraphOptions opts = g.options();
    opts.allow_self_loops = true;
    GraphBuilder b(opts);
    std::vector<VertexId> remap(g.vertex_count());
    VertexId rep;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        const auto& v = g.vertices()[i];
        if (merged[i]) {
            if (VertexId(i) == anchor) rep = b.add_state(map.representative);
            continue;
        }
        remap[i] = v.role == VertexRole::State ? b.add_state(v.label) : b.add_driver(v.label);
    }
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        if (merged[i]) remap[i] = rep;

    // Collapse duplicates, keeping the lowest kind (intrinsic wins).
    std::vector<Edge> out;
    for (const auto& e : g.edges()) {
        if (merged[e.src.index()] && merged[e.dst.index()]) continue;
        out.push_back({remap[e.src.index()], remap[e.dst.index()], e.kind});
    }
    out.push_back({rep, rep, entangled ? EdgeKind::Entanglement : EdgeKind::Intrinsic});
    std::sort(out.begin(), out.end(), [](const Edge& x, const Edge& y) {
        return std::tuple(x.src, x.dst, x.kind) < std::tuple(y.src, y.dst, y.kind);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Edge& x, const Edge& y) { return x.src == y.src && x.dst == y.dst; }),
              out.end());
    for (const auto& e : out) b.add_edge(e.src, e.dst, e.kind);

    return {b.build(), std::move(map)};
}

}  // namespace qnet
