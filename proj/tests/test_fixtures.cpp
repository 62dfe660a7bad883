// The fig*.net fixtures are reconstructions; these checks pin down the
// properties they are meant to have, using the brute-force oracles only.

#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qnet/network_io.hpp"

namespace qnet {
namespace {

QDigraph fixture(const char* name) { return parse_network(read_file(std::string(QNET_FIXTURE_DIR "/") + name)); }

std::vector<std::size_t> idx(const QDigraph& g, std::initializer_list<const char*> labels) {
    std::vector<std::size_t> out;
    for (auto l : labels) out.push_back(g.at(l).index());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexId> ids(const QDigraph& g, std::initializer_list<const char*> labels) {
    std::vector<VertexId> out;
    for (auto l : labels) out.push_back(g.at(l));
    return out;
}

/// State slots left unmatched by some maximum matching, as a set of sets.
std::set<std::vector<std::string>> unmatched_sets(const QDigraph& g) {
    const auto edges = testing::state_edges(g);
    const std::size_t best = testing::brute_max_matching(g);
    std::set<std::vector<std::string>> out;
    testing::enumerate_matchings(g, [&](const std::vector<std::size_t>& m) {
        if (m.size() != best) return;
        std::vector<bool> hit(g.state_count(), false);
        for (auto e : m) hit[edges[e].second] = true;
        std::vector<std::string> un;
        for (std::size_t i = 0; i < hit.size(); ++i)
            if (!hit[i]) un.push_back(g.label(g.states()[i]));
        out.insert(un);
    });
    return out;
}

TEST(Fixtures, Fig1a) {
    auto g = fixture("fig1a.net");
    EXPECT_FALSE(testing::brute_reachable_all(g));
    EXPECT_EQ(testing::naive_in_neighbourhood(g, ids(g, {"V1", "V2"})), idx(g, {"V3"}));
}

TEST(Fixtures, Fig1b) {
    auto g = fixture("fig1b.net");
    for (auto [s, d] : {std::pair{"U1", "V6"}, {"V6", "V3"}, {"V3", "V1"}, {"V2", "V4"}, {"V4", "V2"}, {"V3", "V2"},
                        {"V5", "V7"}, {"V7", "V5"}, {"V6", "V7"}})
        EXPECT_TRUE(g.has_edge(g.at(s), g.at(d))) << s << " -> " << d;
    EXPECT_TRUE(testing::brute_reachable_all(g));
    EXPECT_FALSE(testing::brute_has_dilation(g));
}

TEST(Fixtures, Fig2) {
    auto g = fixture("fig2.net");
    for (auto [s, d] : {std::pair{"V6", "V5"}, {"V5", "V4"}, {"V4", "V2"}})
        EXPECT_TRUE(g.has_edge(g.at(s), g.at(d)));
    EXPECT_EQ(testing::brute_max_matching(g), 5u);
    // V6 has no state in-neighbour, so it is unmatched in every maximum
    // matching; {V6, V7} is one of the two possible unmatched pairs.
    const auto sets = unmatched_sets(g);
    EXPECT_EQ(sets, (std::set<std::vector<std::string>>{{"V4", "V6"}, {"V6", "V7"}}));
    EXPECT_EQ(testing::naive_in_neighbourhood(g, ids(g, {"V4", "V7"})), idx(g, {"V5"}));
    EXPECT_EQ(testing::naive_in_neighbourhood(g, ids(g, {"V3", "V4", "V7"})), idx(g, {"V5", "V7"}));
}

TEST(Fixtures, Fig3a) {
    auto g = fixture("fig3a.net");
    auto f2 = fixture("fig2.net");
    EXPECT_EQ(g.edges().size(), f2.edges().size() + 1);
    for (const auto& e : f2.edges()) EXPECT_TRUE(g.has_edge(g.at(f2.label(e.src)), g.at(f2.label(e.dst))));
    EXPECT_EQ(g.edge_kind(g.at("V2"), g.at("V6")), EdgeKind::Entanglement);
    EXPECT_EQ(testing::brute_max_matching(g), 6u);
}

}  // namespace
}  // namespace qnet
