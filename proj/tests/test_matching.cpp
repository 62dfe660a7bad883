#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qnet/matching.hpp"
#include "qnet/network_io.hpp"

namespace qnet {
namespace {

QDigraph cycle_graph(std::size_t n) {
    GraphBuilder b;
    std::vector<VertexId> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(b.add_state("V" + std::to_string(i + 1)));
    for (std::size_t i = 0; i < n; ++i) b.add_edge(v[i], v[(i + 1) % n], EdgeKind::Intrinsic);
    return b.build();
}

void expect_valid(const QDigraph& g, const Matching& m) {
    std::vector<int> out(g.vertex_count()), in(g.vertex_count());
    for (auto [s, d] : m.edges()) {
        EXPECT_TRUE(g.has_edge(s, d));
        EXPECT_EQ(++out[s.index()], 1) << "shared start " << g.label(s);
        EXPECT_EQ(++in[d.index()], 1) << "shared end " << g.label(d);
    }
    EXPECT_EQ(m.matched_vertices().size(), m.size());
}

TEST(MaximumMatching, ElementaryCycleMatchesEverything) {
    auto g = cycle_graph(3);
    auto m = maximum_matching(g);
    EXPECT_EQ(m.size(), 3u);
    for (auto v : g.states()) EXPECT_TRUE(m.is_matched(v));
}

TEST(MaximumMatching, StarMatchesOnce) {
    auto g = parse_network("state V1\nstate V2\nstate V3\nedge V1 V2\nedge V1 V3");
    EXPECT_EQ(maximum_matching(g).size(), 1u);
}

TEST(MaximumMatching, SelfLoopMatchesItsVertex) {
    auto g = parse_network("state A\nedge A A");
    auto m = maximum_matching(g);
    ASSERT_EQ(m.size(), 1u);
    EXPECT_TRUE(m.is_matched(g.at("A")));
}

TEST(MaximumMatching, IgnoresDriveEdges) {
    auto g = parse_network("state V1\ndriver U1\nedge U1 V1");
    EXPECT_EQ(maximum_matching(g).size(), 0u);
}

TEST(MaximumMatching, DeterministicWitness) {
    // V5 can match V4 or V7; ascending scan takes V4.
    auto g = parse_network(read_file(QNET_FIXTURE_DIR "/fig2.net"));
    auto m = maximum_matching(g);
    EXPECT_EQ(m.successor(g.at("V5")), g.at("V4"));
    EXPECT_EQ(m.edges(), maximum_matching(g).edges());
}

TEST(MaximumMatching, AgreesWithBruteForceExhaustivelyUpToFourVertices) {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::uint64_t pattern = 0; pattern < (1ull << (n * n)); ++pattern) {
            auto g = testing::pattern_network(n, pattern);
            auto m = maximum_matching(g);
            ASSERT_EQ(m.size(), testing::brute_max_matching(g)) << "n=" << n << " pattern=" << pattern;
        }
    }
}

TEST(MaximumMatching, ValidityAndPermutationInvariance) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = 1 + rng() % 10;
        auto g = testing::random_network(rng, {.n = n, .edge_probability = 0.25});
        auto m = maximum_matching(g);
        expect_valid(g, m);

        // Same graph with vertices declared in a shuffled order.
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        GraphBuilder b;
        std::vector<VertexId> id(n);
        for (auto o : order) id[o] = b.add_state(g.label(g.states()[o]));
        for (const auto& e : g.edges()) b.add_edge(id[g.state_slot(e.src)], id[g.state_slot(e.dst)], e.kind);
        EXPECT_EQ(maximum_matching(b.build()).size(), m.size());
    }
}

TEST(MatchingType, RejectsInvalidEdges) {
    auto g = parse_network("state V1\nstate V2\nstate V3\nedge V1 V2\nedge V1 V3\ndriver U\nedge U V1");
    const auto v1 = g.at("V1"), v2 = g.at("V2"), v3 = g.at("V3");
    EXPECT_THROW(Matching(g, {{v1, v2}, {v1, v3}}), std::invalid_argument);
    EXPECT_THROW(Matching(g, {{v2, v3}}), std::invalid_argument);
    EXPECT_THROW(Matching(g, {{g.at("U"), v1}}), std::invalid_argument);
}

TEST(MinimumDrivers, Fig2) {
    auto g = parse_network(read_file(QNET_FIXTURE_DIR "/fig2.net"));
    auto d = minimum_drivers(g);
    EXPECT_EQ(d.n_d, 2u);
    EXPECT_EQ(d.unmatched, (std::vector<VertexId>{g.at("V6"), g.at("V7")}));
    EXPECT_EQ(d.chosen_drivers, d.unmatched);
}

TEST(MinimumDrivers, CycleNeedsOneDriverAtLowestIndex) {
    for (std::size_t n : {1u, 2u, 5u, 17u}) {
        auto g = n == 1 ? parse_network("state V1\nedge V1 V1") : cycle_graph(n);
        auto d = minimum_drivers(g);
        EXPECT_EQ(d.n_d, 1u);
        EXPECT_TRUE(d.unmatched.empty());
        EXPECT_EQ(d.chosen_drivers, (std::vector<VertexId>{g.states().front()}));
    }
}

TEST(MinimumDrivers, IsolatedVertex) {
    auto g = parse_network("state V1");
    auto d = minimum_drivers(g);
    EXPECT_EQ(d.n_d, 1u);
    EXPECT_EQ(d.unmatched, (std::vector<VertexId>{g.at("V1")}));
}

TEST(MinimumDrivers, EmptyNetworkIsAnError) { EXPECT_THROW(minimum_drivers(QDigraph{}), NetworkError); }

TEST(MinimumDrivers, FormulaHoldsOnRandomGraphs) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        auto g = testing::random_network(rng, {.n = 1 + rng() % 12});
        auto m = maximum_matching(g);
        auto d = minimum_drivers(g, m);
        const std::size_t n = g.state_count();
        EXPECT_EQ(d.n_d, std::max<std::size_t>(n - m.size(), 1));
        if (m.size() < n) {
            EXPECT_EQ(d.unmatched.size(), n - m.size());
            EXPECT_EQ(d.chosen_drivers, d.unmatched);
        } else {
            EXPECT_EQ(d.chosen_drivers.size(), 1u);
        }
    }
}

TEST(Decomposition, PureCycle) {
    auto g = parse_network("state V1\nstate V2\nedge V1 V2\nedge V2 V1");
    auto parts = matching_decomposition(g, maximum_matching(g));
    EXPECT_TRUE(parts.paths.empty());
    ASSERT_EQ(parts.cycles.size(), 1u);
    EXPECT_EQ(parts.cycles[0], (std::vector<VertexId>{g.at("V1"), g.at("V2")}));
}

TEST(Decomposition, PurePath) {
    auto g = parse_network("state V1\nstate V2\nstate V3\nedge V1 V2\nedge V2 V3");
    auto parts = matching_decomposition(g, maximum_matching(g));
    EXPECT_TRUE(parts.cycles.empty());
    ASSERT_EQ(parts.paths.size(), 1u);
    EXPECT_EQ(parts.paths[0], (std::vector<VertexId>{g.at("V1"), g.at("V2"), g.at("V3")}));
}

TEST(Decomposition, RejectsForeignMatching) {
    auto g = parse_network("state V1\nstate V2\nedge V1 V2");
    auto h = parse_network("state V1\nstate V2\nedge V2 V1");
    Matching m(h, {{h.at("V2"), h.at("V1")}});
    EXPECT_THROW(matching_decomposition(g, m), std::invalid_argument);
}

TEST(Decomposition, EveryMatchingPartitionsTheVertices) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        auto g = testing::random_network(rng, {.n = 1 + rng() % 5, .edge_probability = 0.4});
        const auto edges = testing::state_edges(g);
        testing::enumerate_matchings(g, [&](const std::vector<std::size_t>& chosen) {
            std::vector<std::pair<VertexId, VertexId>> me;
            for (auto ei : chosen) me.emplace_back(g.states()[edges[ei].first], g.states()[edges[ei].second]);
            Matching m(g, me);
            auto parts = matching_decomposition(g, m);
            std::vector<int> hits(g.vertex_count(), 0);
            for (const auto& p : parts.paths) {
                EXPECT_FALSE(m.is_matched(p.front()));
                for (auto v : p) ++hits[v.index()];
            }
            for (const auto& c : parts.cycles)
                for (auto v : c) ++hits[v.index()];
            for (auto v : g.states()) EXPECT_EQ(hits[v.index()], 1);
        });
    }
}

}  // namespace
}  // namespace qnet
