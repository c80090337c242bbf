#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "subelect/clones.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace subelect;

namespace {
const std::vector<int> kAll{0, 1, 2, 3, 4, 5};
}

TEST_CASE("segment index counts on the fixture") {
    const Election e = fixtures::example1();
    const SegmentIndex w3 = build_segment_index(e, 3);
    REQUIRE(w3.counts.at({0, 1, 2}) == 5);  // {a,b,c}: everyone but v3
    REQUIRE(w3.counts.at({3, 4, 5}) == 4);  // {d,e,f}
    REQUIRE(oracles::clone_voter_count(e, {0, 1, 2}) == 5);

    const SegmentIndex w6 = build_segment_index(e, 6);
    REQUIRE(w6.counts.at(kAll) == 6);

    const SegmentIndex w2 = build_segment_index(e, 2);
    REQUIRE(w2.counts.at({4, 5}) == 6);  // {e,f} are clones for everyone

    REQUIRE_THROWS_AS(build_segment_index(e, 0), BadWidth);
    REQUIRE_THROWS_AS(build_segment_index(e, 7), BadWidth);
}

TEST_CASE("segment index matches definition-level counting") {
    std::mt19937_64 gen(31);
    for (int trial = 0; trial < 40; ++trial) {
        const Election e = oracles::random_election(gen, 6, 6);
        for (int width = 1; width <= e.num_candidates(); ++width) {
            const SegmentIndex index = build_segment_index(e, width);
            for (const auto& [set, count] : index.counts)
                REQUIRE(count == oracles::clone_voter_count(e, set));
        }
    }
}

TEST_CASE("segment index construction stays within its operation bound") {
    std::mt19937_64 gen(47);
    for (const auto& [m, n] : std::vector<std::pair<int, int>>{{10, 8}, {24, 10}, {40, 6}}) {
        const Election e = oracles::random_election(gen, m, n, m, n);
        for (int width : {1, 2, m / 2, m - 1, m}) {
            const SegmentIndex index = build_segment_index(e, width);
            const std::uint64_t windows =
                static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(m - width + 1);
            REQUIRE(index.element_ops >= windows);
            REQUIRE(index.element_ops <= 4 * windows * static_cast<std::uint64_t>(width));
        }
    }
}

TEST_CASE("hidden_clones on the fixture") {
    const Election e = fixtures::example1();

    const auto w35 = hidden_clones(e, 3, 5);
    REQUIRE(w35.has_value());
    REQUIRE(w35->candidates == std::vector<int>{0, 1, 2});
    REQUIRE(w35->voters == std::vector<int>{0, 1, 3, 4, 5});  // everyone but v3

    const auto w26 = hidden_clones(e, 2, 6);
    REQUIRE(w26.has_value());
    REQUIRE(w26->voters == kAll);
    REQUIRE(witness_valid(e, *w26));
    REQUIRE(oracles::clone_voter_count(e, w26->candidates) == 6);

    REQUIRE_FALSE(hidden_clones(e, 4, 4).has_value());
    REQUIRE_THROWS_AS(hidden_clones(e, 2, 0), BadVoterCount);
    REQUIRE_THROWS_AS(hidden_clones(e, 2, 7), BadVoterCount);
}

TEST_CASE("max_clone fixture values") {
    const Election e = fixtures::example1();
    REQUIRE(max_clone(e, 1).first == 6);
    REQUIRE(max_clone(e, 2).first == 6);
    REQUIRE(max_clone(e, 3).first == 5);
    REQUIRE(max_clone(e, 4).first == 3);
    REQUIRE(max_clone(e, 5).first == 4);  // {a,b,c,e,f} is contiguous for v1, v3, v4, v6
    REQUIRE(max_clone(e, 6).first == 6);

    const auto [count, witness] = max_clone(e, 3);
    REQUIRE(witness.candidates == std::vector<int>{0, 1, 2});
    REQUIRE(witness_valid(e, witness));
}

TEST_CASE("max_clone equals subset brute force") {
    std::mt19937_64 gen(13);
    for (int trial = 0; trial < 40; ++trial) {
        const Election e = oracles::random_election(gen, 6, 6);
        for (int width = 1; width <= e.num_candidates(); ++width)
            REQUIRE(max_clone(e, width).first == oracles::max_clone(e, width));
    }
}

TEST_CASE("singletons and the full set are clones for everyone") {
    std::mt19937_64 gen(17);
    for (int trial = 0; trial < 20; ++trial) {
        const Election e = oracles::random_election(gen, 7, 7);
        REQUIRE(max_clone(e, 1).first == e.num_voters());
        REQUIRE(max_clone(e, e.num_candidates()).first == e.num_voters());
    }
}

TEST_CASE("clone sets are not monotone in width") {
    const Election cyclic = fixtures::from_rows({"abc", "bca", "cab"});
    REQUIRE(max_clone(cyclic, 1).first == 3);
    REQUIRE(max_clone(cyclic, 3).first == 3);
    REQUIRE(max_clone(cyclic, 2).first < 3);
}

TEST_CASE("count_hidden_clones fixture values") {
    const Election e = fixtures::example1();
    REQUIRE(count_hidden_clones(e, 2, 6) == 2);  // {b,c} and {e,f}
    REQUIRE(count_hidden_clones(e, 6, 6) == 1);
    REQUIRE(count_hidden_clones(e, 2, 7) == 0);
}

TEST_CASE("count_hidden_clones equals double enumeration") {
    std::mt19937_64 gen(29);
    for (int trial = 0; trial < 15; ++trial) {
        const Election e = oracles::random_election(gen, 7, 7);
        for (int width = 1; width <= e.num_candidates(); ++width)
            for (int voters = 1; voters <= e.num_voters(); ++voters)
                REQUIRE(count_hidden_clones(e, width, voters) ==
                        oracles::count_hidden_clones(e, width, voters));
    }
}

TEST_CASE("clone swap distance on the nine-candidate instance") {
    const Election e = fixtures::swap_instance();
    const std::vector<int> set{0, 1, 2, 4};  // {a,b,c,e}
    const auto [swaps, voters] = clone_swap_distance(e, set, 3);
    REQUIRE(swaps == 3);
    REQUIRE(voters == std::vector<int>{0, 1, 2});
}

TEST_CASE("clone swap distance is zero on real clone sets") {
    const Election e = fixtures::example1();
    REQUIRE(clone_swap_distance(e, {4, 5}, 6).first == 0);
    REQUIRE(clone_swap_distance(e, {0, 2}, 1).first == 0);  // v5 ranks a,c adjacent
    REQUIRE_THROWS_AS(clone_swap_distance(e, {}, 1), EmptySelection);
    REQUIRE_THROWS_AS(clone_swap_distance(e, {0}, 0), BadVoterCount);
}

TEST_CASE("per-vote cost formula equals adjacent-swap search") {
    std::mt19937_64 gen(41);
    int checked = 0;
    while (checked < 120) {
        const Election e = oracles::random_election(gen, 6, 1, 2, 1);
        const int m = e.num_candidates();
        const int width = 1 + static_cast<int>(gen() % static_cast<unsigned>(m));
        std::vector<int> set;
        {
            std::vector<int> pool(static_cast<std::size_t>(m));
            std::iota(pool.begin(), pool.end(), 0);
            for (int i = 0; i < width; ++i) {
                const std::size_t pick = gen() % pool.size();
                set.push_back(pool[pick]);
                pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
            }
        }
        std::sort(set.begin(), set.end());
        const long long formula = clone_swap_distance(e, set, 1).first;
        REQUIRE(formula == oracles::vote_swap_distance_bfs(e.ranking(0), set));
        ++checked;
    }
}

TEST_CASE("zero swap distance coincides with a hidden clone witness") {
    std::mt19937_64 gen(59);
    for (int trial = 0; trial < 30; ++trial) {
        const Election e = oracles::random_election(gen, 5, 5);
        const int m = e.num_candidates();
        for (int width = 1; width <= m; ++width) {
            const auto [count, witness] = max_clone(e, width);
            REQUIRE(clone_swap_distance(e, witness.candidates, count).first == 0);
            if (count < e.num_voters()) {
                // No width-set is contiguous for count+1 voters, so every set
                // has positive distance at that quota.
                const auto best = closest_clone_set(e, width, count + 1, true);
                REQUIRE(best.total_swaps > 0);
            }
        }
    }
}

TEST_CASE("closest_clone_set on the fixture and the swap instance") {
    const Election e1 = fixtures::example1();
    const auto zero = closest_clone_set(e1, 2, 6);
    REQUIRE(zero.total_swaps == 0);
    REQUIRE(zero.clone_set == std::vector<int>{1, 2});  // lexicographic tie-break over {e,f}

    const Election e2 = fixtures::swap_instance();
    const auto segment_only = closest_clone_set(e2, 4, 3, false);
    REQUIRE(segment_only.total_swaps == 4);  // best segment set {a,b,c,f}
    const auto exhaustive = closest_clone_set(e2, 4, 3, true);
    REQUIRE(exhaustive.total_swaps == 3);
    REQUIRE(exhaustive.clone_set == std::vector<int>{0, 1, 2, 4});

    REQUIRE(closest_clone_set(e1, 6, 6).total_swaps == 0);
    REQUIRE(closest_clone_set(e1, 6, 6).clone_set == kAll);
}
