#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "subelect/combinatorics.hpp"
#include "subelect/election.hpp"
#include "subelect/errors.hpp"

namespace subelect {

// Counts, for every candidate set realizable as a contiguous segment of some
// vote, the number of votes in which it is contiguous. Keys are sorted index
// vectors. element_ops tracks window-maintenance steps so tests can pin the
// O(n * (m - width + 1) * width) construction cost.
struct SegmentIndex {
    int width = 0;
    std::map<std::vector<int>, int> counts;
    std::uint64_t element_ops = 0;
};

namespace detail {

inline void check_width(const Election& e, int width) {
    if (width < 1 || width > e.num_candidates()) throw BadWidth(width, e.num_candidates());
}

inline void check_voter_count(const Election& e, int count) {
    if (count < 1 || count > e.num_voters()) throw BadVoterCount(count, e.num_voters());
}

// True iff the set occupies |set| consecutive positions in the voter's vote.
inline bool contiguous_for_voter(const Election& e, const std::vector<int>& set, int voter) {
    int lo = e.num_candidates(), hi = -1;
    for (int c : set) {
        lo = std::min(lo, e.position(voter, c));
        hi = std::max(hi, e.position(voter, c));
    }
    return hi - lo + 1 == static_cast<int>(set.size());
}

inline std::vector<int> voters_with_segment(const Election& e, const std::vector<int>& set) {
    std::vector<int> out;
    for (int v = 0; v < e.num_voters(); ++v)
        if (contiguous_for_voter(e, set, v)) out.push_back(v);
    return out;
}

}  // namespace detail

inline SegmentIndex build_segment_index(const Election& e, int width) {
    detail::check_width(e, width);
    SegmentIndex index;
    index.width = width;
    const int m = e.num_candidates();
    for (int v = 0; v < e.num_voters(); ++v) {
        const std::vector<int>& vote = e.ranking(v);
        // Sliding window kept sorted; one insert + one erase per shift.
        std::vector<int> window(vote.begin(), vote.begin() + width);
        std::sort(window.begin(), window.end());
        index.element_ops += static_cast<std::uint64_t>(width);
        for (int start = 0;; ++start) {
            ++index.counts[window];
            index.element_ops += static_cast<std::uint64_t>(width);
            if (start + width >= m) break;
            const int leaving = vote[static_cast<std::size_t>(start)];
            const int entering = vote[static_cast<std::size_t>(start + width)];
            window.erase(std::lower_bound(window.begin(), window.end(), leaving));
            window.insert(std::upper_bound(window.begin(), window.end(), entering), entering);
            index.element_ops += static_cast<std::uint64_t>(width);
        }
    }
    return index;
}

// Largest voter count over all width-sized clone sets, with a witness. Among
// equally frequent sets the lexicographically smallest index set wins.
inline std::pair<int, SubelectionWitness> max_clone(const Election& e, int width) {
    const SegmentIndex index = build_segment_index(e, width);
    int best = 0;
    const std::vector<int>* best_set = nullptr;
    for (const auto& [set, count] : index.counts) {
        if (count > best) {
            best = count;
            best_set = &set;
        }
    }
    SubelectionWitness w;
    w.kind = WitnessKind::Clone;
    w.candidates = *best_set;
    w.voters = detail::voters_with_segment(e, *best_set);
    return {best, std::move(w)};
}

inline std::optional<SubelectionWitness> hidden_clones(const Election& e, int width,
                                                       int min_voters) {
    detail::check_width(e, width);
    detail::check_voter_count(e, min_voters);
    auto [count, witness] = max_clone(e, width);
    if (count < min_voters) return std::nullopt;
    return witness;
}

// Number of (candidate set, voter set) pairs of sizes (width, voters) such
// that the set is a clone set for those voters: sum of C(count, voters) over
// the segment index.
inline mpz_class count_hidden_clones(const Election& e, int width, int voters) {
    detail::check_width(e, width);
    if (voters < 1) throw BadVoterCount(voters, e.num_voters());
    const SegmentIndex index = build_segment_index(e, width);
    mpz_class total = 0;
    for (const auto& [set, count] : index.counts)
        total += binomial(static_cast<unsigned long>(count), static_cast<unsigned long>(voters));
    return total;
}

namespace detail {

// Swaps needed in one vote to make `set` contiguous: every non-member lying
// strictly between the outermost members must jump over the nearer side.
inline long long vote_clone_cost(const Election& e, const std::vector<int>& set, int voter) {
    int lo = e.num_candidates(), hi = -1;
    for (int c : set) {
        lo = std::min(lo, e.position(voter, c));
        hi = std::max(hi, e.position(voter, c));
    }
    long long cost = 0;
    int members_left = 0;
    for (int p = lo; p <= hi; ++p) {
        const int c = e.ranking(voter)[static_cast<std::size_t>(p)];
        if (std::find(set.begin(), set.end(), c) != set.end()) {
            ++members_left;
        } else {
            const int members_right = static_cast<int>(set.size()) - members_left;
            cost += std::min(members_left, members_right);
        }
    }
    return cost;
}

}  // namespace detail

// Total swaps over the cheapest `votes_kept` votes to make clone_set a clone
// set for them, plus the chosen voters (ascending).
inline std::pair<long long, std::vector<int>> clone_swap_distance(const Election& e,
                                                                  const std::vector<int>& clone_set,
                                                                  int votes_kept) {
    if (clone_set.empty()) throw EmptySelection();
    detail::check_voter_count(e, votes_kept);
    std::vector<std::pair<long long, int>> costs;
    for (int v = 0; v < e.num_voters(); ++v)
        costs.emplace_back(detail::vote_clone_cost(e, clone_set, v), v);
    std::sort(costs.begin(), costs.end());
    long long total = 0;
    std::vector<int> chosen;
    for (int k = 0; k < votes_kept; ++k) {
        total += costs[static_cast<std::size_t>(k)].first;
        chosen.push_back(costs[static_cast<std::size_t>(k)].second);
    }
    std::sort(chosen.begin(), chosen.end());
    return {total, std::move(chosen)};
}

struct ClosestCloneResult {
    std::vector<int> clone_set;
    long long total_swaps = 0;
};

// Minimizes clone_swap_distance over candidate sets of the given width. The
// default family is the segment-realizable sets; the optimum can lie outside
// it, so `exhaustive` searches all width-subsets instead (m <= 20 only).
inline ClosestCloneResult closest_clone_set(const Election& e, int width, int votes_kept,
                                            bool exhaustive = false) {
    detail::check_width(e, width);
    detail::check_voter_count(e, votes_kept);
    ClosestCloneResult best;
    best.total_swaps = -1;
    auto consider = [&](const std::vector<int>& set) {
        const long long cost = clone_swap_distance(e, set, votes_kept).first;
        if (best.total_swaps < 0 || cost < best.total_swaps) {
            best.total_swaps = cost;
            best.clone_set = set;
        }
    };
    if (exhaustive) {
        if (e.num_candidates() > 20)
            throw BudgetExceeded("exhaustive clone search limited to 20 candidates");
        std::vector<int> set = first_combination(e.num_candidates(), width);
        do {
            consider(set);
        } while (next_combination(set, e.num_candidates()));
    } else {
        for (const auto& [set, count] : build_segment_index(e, width).counts) consider(set);
    }
    return best;
}

}  // namespace subelect
