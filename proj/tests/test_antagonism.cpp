#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "subelect/antagonism.hpp"
#include "subelect/generators.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace subelect;

namespace {
const std::vector<int> kAll{0, 1, 2, 3, 4, 5};
}

TEST_CASE("verify_antagonism_voters finds the d,e,f split") {
    const Election e = fixtures::example1();
    const auto w = verify_antagonism_voters(e, kAll, 3);
    REQUIRE(w.has_value());
    REQUIRE(w->candidates == std::vector<int>{3, 4, 5});
    REQUIRE(w->group_a == std::vector<int>{1, 3, 4});  // v2, v4, v5 rank d > e > f
    REQUIRE(w->group_b == std::vector<int>{0, 2, 5});
    REQUIRE(witness_valid(e, *w));
}

TEST_CASE("verify_antagonism_voters edge cases") {
    const Election e = fixtures::example1();
    const auto trivial = verify_antagonism_voters(e, {0, 1}, 1);
    REQUIRE(trivial.has_value());
    REQUIRE(trivial->candidates.size() == 1);
    REQUIRE(trivial->group_a.size() == 1);

    REQUIRE_FALSE(verify_antagonism_voters(e, kAll, 4).has_value());
    REQUIRE_THROWS_AS(verify_antagonism_voters(e, {0, 1, 2}, 2), OddVoterCount);
    REQUIRE_THROWS_AS(verify_antagonism_voters(e, {}, 1), EmptySelection);
    REQUIRE_THROWS_AS(verify_antagonism_voters(e, {0, 1}, 7), BadWidth);
}

TEST_CASE("verify_antagonism_candidates groups by induced permutation") {
    const Election e = fixtures::example1();
    const auto def = verify_antagonism_candidates(e, {3, 4, 5}, 6);
    REQUIRE(def.has_value());
    REQUIRE(def->candidates == std::vector<int>{3, 4, 5});
    REQUIRE(def->group_a == std::vector<int>{1, 3, 4});
    REQUIRE(def->group_b == std::vector<int>{0, 2, 5});

    // v5 ranks a > c > b, so {a,b,c} cannot antagonize all six voters.
    REQUIRE_FALSE(verify_antagonism_candidates(e, {0, 1, 2}, 6).has_value());

    const auto single = verify_antagonism_candidates(e, {0}, 2);
    REQUIRE(single.has_value());
    REQUIRE(single->group_a.size() == 1);
    REQUIRE(single->group_b.size() == 1);

    REQUIRE_THROWS_AS(verify_antagonism_candidates(e, {0}, 3), OddVoterCount);
    REQUIRE_THROWS_AS(verify_antagonism_candidates(e, {}, 2), EmptySelection);
}

TEST_CASE("hidden_an on the fixture and the compass profile") {
    const Election e = fixtures::example1();
    const auto w36 = hidden_an(e, 3, 6);
    REQUIRE(w36.has_value());
    REQUIRE(w36->candidates == std::vector<int>{3, 4, 5});
    REQUIRE(w36->group_a == std::vector<int>{1, 3, 4});
    REQUIRE(w36->group_b == std::vector<int>{0, 2, 5});

    CultureSpec spec;
    spec.kind = CultureKind::CompassAn;
    spec.num_candidates = 6;
    spec.num_voters = 8;
    const Election an = sample(spec);
    REQUIRE(hidden_an(an, 6, 8).has_value());

    REQUIRE_FALSE(hidden_an(e, 4, 6).has_value());
    REQUIRE_THROWS_AS(hidden_an(e, 3, 3), OddVoterCount);
}

TEST_CASE("antagonism verifiers agree with brute force") {
    std::mt19937_64 gen(97);
    for (int trial = 0; trial < 25; ++trial) {
        const Election e = oracles::random_election(gen, 6, 6);
        for (int mp = 1; mp <= e.num_candidates(); ++mp)
            for (int np = 2; np <= e.num_voters(); np += 2) {
                const bool expected = oracles::hidden_an_exists(e, mp, np);
                const auto by_voters = hidden_an(e, mp, np, SearchStrategy::ByVoters);
                const auto by_cands = hidden_an(e, mp, np, SearchStrategy::ByCandidates);
                REQUIRE(by_voters.has_value() == expected);
                REQUIRE(by_cands.has_value() == expected);
                if (by_voters) REQUIRE(witness_valid(e, *by_voters));
                if (by_cands) REQUIRE(witness_valid(e, *by_cands));
            }
    }
}

TEST_CASE("max_an fixture values") {
    const Election e = fixtures::example1();
    const MaxAnResult rigid3 = max_an(e, 3, AntagonismVariant::Rigid);
    REQUIRE(rigid3.score == 6);
    REQUIRE(rigid3.witness.has_value());
    REQUIRE(rigid3.witness->candidates == std::vector<int>{3, 4, 5});

    const Election ident = fixtures::from_rows({"abcd", "abcd", "abcd", "abcd"});
    for (int mp = 2; mp <= 4; ++mp) {
        const MaxAnResult r = max_an(ident, mp, AntagonismVariant::Rigid);
        REQUIRE(r.score == 0);
        REQUIRE_FALSE(r.witness.has_value());
    }

    const MaxAnResult product2 = max_an(e, 2, AntagonismVariant::Product);
    REQUIRE(product2.score == oracles::max_an(e, 2, oracles::AnScore::Product));
}

TEST_CASE("max_an matches brute force for all variants") {
    std::mt19937_64 gen(101);
    for (int trial = 0; trial < 20; ++trial) {
        const Election e = oracles::random_election(gen, 6, 6);
        for (int mp = 1; mp <= e.num_candidates(); ++mp) {
            REQUIRE(max_an(e, mp, AntagonismVariant::Rigid).score ==
                    oracles::max_an(e, mp, oracles::AnScore::Rigid));
            REQUIRE(max_an(e, mp, AntagonismVariant::Sum).score ==
                    oracles::max_an(e, mp, oracles::AnScore::Sum));
            REQUIRE(max_an(e, mp, AntagonismVariant::Product).score ==
                    oracles::max_an(e, mp, oracles::AnScore::Product));
        }
    }
}

TEST_CASE("reversing every vote preserves the rigid score") {
    std::mt19937_64 gen(103);
    for (int trial = 0; trial < 15; ++trial) {
        const Election e = oracles::random_election(gen, 5, 6);
        std::vector<std::vector<int>> reversed;
        for (int v = 0; v < e.num_voters(); ++v)
            reversed.emplace_back(e.ranking(v).rbegin(), e.ranking(v).rend());
        const Election flipped(e.labels(), std::move(reversed));
        for (int mp = 1; mp <= e.num_candidates(); ++mp)
            REQUIRE(max_an(e, mp, AntagonismVariant::Rigid).score ==
                    max_an(flipped, mp, AntagonismVariant::Rigid).score);
    }
}

TEST_CASE("variant score relations hold") {
    std::mt19937_64 gen(107);
    for (int trial = 0; trial < 15; ++trial) {
        const Election e = oracles::random_election(gen, 5, 6, 2, 2);
        for (int mp = 1; mp <= e.num_candidates(); ++mp) {
            const long long rigid = max_an(e, mp, AntagonismVariant::Rigid).score;
            const long long sum = max_an(e, mp, AntagonismVariant::Sum).score;
            REQUIRE(rigid % 2 == 0);
            REQUIRE(rigid <= sum);
        }
    }
}

TEST_CASE("antagonism monotonicity over random elections") {
    std::mt19937_64 gen(109);
    for (int trial = 0; trial < 15; ++trial) {
        const Election e = oracles::random_election(gen, 5, 6);
        for (int mp = 1; mp <= e.num_candidates(); ++mp)
            for (int np = 2; np <= e.num_voters(); np += 2) {
                if (!hidden_an(e, mp, np)) continue;
                for (int mp2 = 1; mp2 <= mp; ++mp2)
                    for (int np2 = 2; np2 <= np; np2 += 2)
                        REQUIRE(hidden_an(e, mp2, np2).has_value());
            }
    }
}

TEST_CASE("antagonism signature of the fixture") {
    const Election e = fixtures::example1();
    const Signature sig = antagonism_signature(e);
    bool has_36 = false;
    for (const auto& p : sig.points) has_36 |= p == std::pair<int, int>{3, 6};
    REQUIRE(has_36);
    // v1 and v4 are full reverses of each other, so every width is achievable
    // with two voters; the frontier ends at (6, 2).
    REQUIRE(sig.points.back() == std::pair<int, int>{6, 2});
}

TEST_CASE("antagonism signature of degenerate elections") {
    CultureSpec spec;
    spec.kind = CultureKind::CompassAn;
    spec.num_candidates = 10;
    spec.num_voters = 50;
    const Election an = sample(spec);
    const Signature sig = antagonism_signature(an);
    REQUIRE(sig == Signature{{{10, 50}}});

    const Election ident = fixtures::from_rows({"abc", "abc", "abc"});
    REQUIRE(antagonism_signature(ident) == Signature{{{1, 2}}});

    const Election lone = fixtures::from_rows({"abc"});
    REQUIRE(antagonism_signature(lone) == Signature{});
}
