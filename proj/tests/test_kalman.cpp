#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qnet/kalman.hpp"
#include "qnet/network_io.hpp"

namespace qnet {
namespace {

QDigraph fixture(const char* name) { return parse_network(read_file(std::string(QNET_FIXTURE_DIR "/") + name)); }

TEST(ModP, Arithmetic) {
    using namespace modp;
    EXPECT_EQ(add(kPrime - 1, 1), 0u);
    EXPECT_EQ(sub(0, 1), kPrime - 1);
    EXPECT_EQ(mul(kPrime - 1, kPrime - 1), 1u);
    for (std::uint64_t a : std::initializer_list<std::uint64_t>{1, 2, 12345, kPrime - 2}) EXPECT_EQ(mul(a, inv(a)), 1u);
}

TEST(ModP, RankOfKnownMatrices) {
    EXPECT_EQ(modp::rank({}, 0, 0), 0u);
    EXPECT_EQ(modp::rank({1, 0, 0, 1}, 2, 2), 2u);
    EXPECT_EQ(modp::rank({1, 2, 2, 4}, 2, 2), 1u);
    EXPECT_EQ(modp::rank({1, 2, 3, 4, 5, 6, 7, 8, 9}, 3, 3), 2u);
    EXPECT_EQ(modp::rank({0, 0, 0, 0, 0, 0}, 2, 3), 0u);
    // det = 2 * (p + 1) / 2 - 1 = p, singular only modulo p.
    EXPECT_EQ(modp::rank({2, 1, 1, (modp::kPrime + 1) / 2}, 2, 2), 1u);
    EXPECT_EQ(modp::rank({1, 0, 0, 0, 1, 0}, 3, 2), 1u);
    EXPECT_EQ(modp::rank({1, 0, 0, 0, 0, 1}, 3, 2), 2u);
}

TEST(GenericRank, ChainIsFullRank) {
    auto c = generic_rank_check(fixture("chain.net"));
    EXPECT_TRUE(c.full_rank);
    EXPECT_EQ(c.achieved_rank, 3u);
    EXPECT_EQ(c.n, 3u);
    EXPECT_EQ(c.field_prime, modp::kPrime);
    EXPECT_EQ(c.seed, 42u);
}

TEST(GenericRank, StarIsRankDeficientOnEveryTrial) {
    auto g = fixture("star.net");
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto c = generic_rank_check(g, std::nullopt, {.trials = 5, .seed = seed});
        EXPECT_FALSE(c.full_rank);
        EXPECT_EQ(c.achieved_rank, 2u);
        EXPECT_EQ(c.trials, 5u);
    }
}

TEST(GenericRank, Figures) {
    EXPECT_EQ(generic_rank_check(fixture("fig1a.net")).achieved_rank, 2u);
    EXPECT_TRUE(generic_rank_check(fixture("fig1b.net")).full_rank);
    EXPECT_EQ(generic_rank_check(fixture("fig2.net")).achieved_rank, 5u);
    EXPECT_TRUE(generic_rank_check(fixture("cycle.net")).full_rank);
}

TEST(GenericRank, CertificateRecordsRequestedTrials) {
    auto c = generic_rank_check(fixture("chain.net"), std::nullopt, {.trials = 7, .seed = 3});
    EXPECT_EQ(c.trials, 7u);
    EXPECT_EQ(c.seed, 3u);
}

TEST(GenericRank, DeterministicForFixedSeed) {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 50; ++i) {
        auto g = testing::random_network(rng, {.n = 2 + rng() % 8, .drivers = 1, .edge_probability = 0.2});
        for (std::uint64_t seed : {0ull, 42ull, 1ull << 40})
            EXPECT_EQ(generic_rank_check(g, std::nullopt, {3, seed}), generic_rank_check(g, std::nullopt, {3, seed}));
    }
}

TEST(GenericRank, DriverAssignmentUsesUnitColumns) {
    auto g = parse_network("state V1\nstate V2\nstate V3\nedge V1 V2\nedge V1 V3");
    auto d = minimum_drivers(g);
    ASSERT_EQ(d.n_d, 2u);
    auto c = generic_rank_check(g, d);
    EXPECT_TRUE(c.full_rank) << c.achieved_rank;
}

TEST(GenericRank, Errors) {
    auto g = parse_network("state V1\nstate V2\nedge V1 V2");
    EXPECT_THROW(generic_rank_check(g), NetworkError);
    EXPECT_THROW(generic_rank_check(fixture("chain.net"), std::nullopt, {.trials = 0}), std::invalid_argument);
    DriverAssignment none;
    EXPECT_THROW(generic_rank_check(g, none), NetworkError);
}

TEST(GenericRank, RankNeverExceedsStructuralBound) {
    // Generic rank is at most the number of states reachable from a driver.
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        auto g = testing::random_network(rng, {.n = 1 + rng() % 9, .drivers = 1 + rng() % 2, .edge_probability = 0.2});
        auto c = generic_rank_check(g);
        EXPECT_LE(c.achieved_rank, c.n);
        if (!testing::brute_reachable_all(g)) EXPECT_FALSE(c.full_rank);
    }
}

}  // namespace
}  // namespace qnet
