#pragma once

// Brute-force reference implementations, independent of the library's
// algorithmic paths: plain subset/permutation enumeration straight from the
// definitions. Only usable at toy sizes.

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "subelect/election.hpp"

namespace oracles {

using subelect::Election;

inline void subsets_of_size(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> subset;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(subset.size()) == k) {
            fn(subset);
            return;
        }
        for (int i = start; i <= n - (k - static_cast<int>(subset.size())); ++i) {
            subset.push_back(i);
            rec(i + 1);
            subset.pop_back();
        }
    };
    rec(0);
}

inline bool clone_for_voter(const Election& e, const std::vector<int>& set, int voter) {
    int lo = e.num_candidates(), hi = -1;
    for (int c : set) {
        lo = std::min(lo, e.position(voter, c));
        hi = std::max(hi, e.position(voter, c));
    }
    return hi - lo + 1 == static_cast<int>(set.size());
}

inline int clone_voter_count(const Election& e, const std::vector<int>& set) {
    int count = 0;
    for (int v = 0; v < e.num_voters(); ++v)
        if (clone_for_voter(e, set, v)) ++count;
    return count;
}

inline int max_clone(const Election& e, int width) {
    int best = 0;
    subsets_of_size(e.num_candidates(), width, [&](const std::vector<int>& set) {
        best = std::max(best, clone_voter_count(e, set));
    });
    return best;
}

// Direct double enumeration over candidate sets and voter sets.
inline mpz_class count_hidden_clones(const Election& e, int width, int voters) {
    mpz_class total = 0;
    subsets_of_size(e.num_candidates(), width, [&](const std::vector<int>& set) {
        subsets_of_size(e.num_voters(), voters, [&](const std::vector<int>& vs) {
            for (int v : vs)
                if (!clone_for_voter(e, set, v)) return;
            ++total;
        });
    });
    return total;
}

// Minimum adjacent swaps applied to one vote until `set` is contiguous (BFS
// over permutations; m <= 6 or so).
inline int vote_swap_distance_bfs(const std::vector<int>& vote, const std::vector<int>& set) {
    auto contiguous = [&](const std::vector<int>& v) {
        int lo = static_cast<int>(v.size()), hi = -1;
        for (std::size_t p = 0; p < v.size(); ++p)
            if (std::find(set.begin(), set.end(), v[p]) != set.end()) {
                lo = std::min(lo, static_cast<int>(p));
                hi = std::max(hi, static_cast<int>(p));
            }
        return hi - lo + 1 == static_cast<int>(set.size());
    };
    std::map<std::vector<int>, int> dist;
    std::deque<std::vector<int>> queue;
    dist[vote] = 0;
    queue.push_back(vote);
    while (!queue.empty()) {
        std::vector<int> cur = queue.front();
        queue.pop_front();
        const int d = dist[cur];
        if (contiguous(cur)) return d;
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            std::vector<int> next = cur;
            std::swap(next[i], next[i + 1]);
            if (dist.emplace(next, d + 1).second) queue.push_back(next);
        }
    }
    return -1;
}

inline std::vector<int> induced_order(const Election& e, int voter,
                                      const std::vector<int>& candidates) {
    std::vector<int> order = candidates;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return e.position(voter, a) < e.position(voter, b); });
    return order;
}

inline bool hidden_id_exists(const Election& e, int m_prime, int n_prime) {
    bool found = false;
    subsets_of_size(e.num_candidates(), m_prime, [&](const std::vector<int>& set) {
        if (found) return;
        std::map<std::vector<int>, int> groups;
        for (int v = 0; v < e.num_voters(); ++v) ++groups[induced_order(e, v, set)];
        for (const auto& [order, size] : groups)
            if (size >= n_prime) {
                found = true;
                return;
            }
    });
    return found;
}

inline int max_id(const Election& e, int m_prime) {
    int best = 0;
    subsets_of_size(e.num_candidates(), m_prime, [&](const std::vector<int>& set) {
        std::map<std::vector<int>, int> groups;
        for (int v = 0; v < e.num_voters(); ++v) ++groups[induced_order(e, v, set)];
        for (const auto& [order, size] : groups) best = std::max(best, size);
    });
    return best;
}

// Exact-size (m', n') identity pairs by double enumeration.
inline mpz_class count_hidden_id(const Election& e, int m_prime, int n_prime) {
    mpz_class total = 0;
    subsets_of_size(e.num_candidates(), m_prime, [&](const std::vector<int>& set) {
        subsets_of_size(e.num_voters(), n_prime, [&](const std::vector<int>& vs) {
            const std::vector<int> first = induced_order(e, vs[0], set);
            for (std::size_t i = 1; i < vs.size(); ++i)
                if (induced_order(e, vs[i], set) != first) return;
            ++total;
        });
    });
    return total;
}

inline bool hidden_an_exists(const Election& e, int m_prime, int n_prime) {
    if (n_prime % 2 != 0) return false;
    bool found = false;
    subsets_of_size(e.num_candidates(), m_prime, [&](const std::vector<int>& set) {
        if (found) return;
        std::map<std::vector<int>, int> groups;
        for (int v = 0; v < e.num_voters(); ++v) ++groups[induced_order(e, v, set)];
        for (const auto& [order, size] : groups) {
            std::vector<int> reversed(order.rbegin(), order.rend());
            if (order == reversed) {
                if (size >= n_prime) found = true;
            } else {
                auto it = groups.find(reversed);
                if (it != groups.end() && size >= n_prime / 2 && it->second >= n_prime / 2)
                    found = true;
            }
            if (found) return;
        }
    });
    return found;
}

enum class AnScore { Rigid, Sum, Product };

inline long long max_an(const Election& e, int m_prime, AnScore kind) {
    long long best = 0;
    subsets_of_size(e.num_candidates(), m_prime, [&](const std::vector<int>& set) {
        std::map<std::vector<int>, long long> groups;
        for (int v = 0; v < e.num_voters(); ++v) ++groups[induced_order(e, v, set)];
        for (const auto& [order, size] : groups) {
            std::vector<int> reversed(order.rbegin(), order.rend());
            long long score = 0;
            if (order == reversed) {
                switch (kind) {
                    case AnScore::Rigid: score = 2 * (size / 2); break;
                    case AnScore::Sum: score = size; break;
                    case AnScore::Product: score = (size / 2) * ((size + 1) / 2); break;
                }
            } else {
                auto it = groups.find(reversed);
                if (it == groups.end()) continue;
                switch (kind) {
                    case AnScore::Rigid: score = 2 * std::min(size, it->second); break;
                    case AnScore::Sum: score = size + it->second; break;
                    case AnScore::Product: score = size * it->second; break;
                }
            }
            best = std::max(best, score);
        }
    });
    return best;
}

inline int kendall_tau(const Election& e, int voter, const std::vector<int>& order) {
    int swaps = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (!e.prefers(voter, order[i], order[j])) ++swaps;
    return swaps;
}

// Minimum total swaps (within the restricted votes) to make some (m', n')
// subelection an identity: enumerate candidate sets, target orders and take
// the n' cheapest voters.
inline long long min_swaps_to_identity(const Election& e, int m_prime, int n_prime) {
    long long best = -1;
    subsets_of_size(e.num_candidates(), m_prime, [&](const std::vector<int>& set) {
        std::vector<int> order = set;
        std::sort(order.begin(), order.end());
        do {
            std::vector<long long> costs;
            for (int v = 0; v < e.num_voters(); ++v) costs.push_back(kendall_tau(e, v, order));
            std::sort(costs.begin(), costs.end());
            long long total = 0;
            for (int k = 0; k < n_prime; ++k) total += costs[static_cast<std::size_t>(k)];
            if (best < 0 || total < best) best = total;
        } while (std::next_permutation(order.begin(), order.end()));
    });
    return best;
}

// Antagonism counterpart: disjoint groups of n'/2 voters each, the first
// charged against the order, the second against its reverse.
inline long long min_swaps_to_antagonism(const Election& e, int m_prime, int n_prime) {
    long long best = -1;
    const int half = n_prime / 2;
    subsets_of_size(e.num_candidates(), m_prime, [&](const std::vector<int>& set) {
        std::vector<int> order = set;
        std::sort(order.begin(), order.end());
        do {
            std::vector<int> reversed(order.rbegin(), order.rend());
            subsets_of_size(e.num_voters(), half, [&](const std::vector<int>& group_a) {
                std::vector<int> rest;
                for (int v = 0; v < e.num_voters(); ++v)
                    if (std::find(group_a.begin(), group_a.end(), v) == group_a.end())
                        rest.push_back(v);
                long long base = 0;
                for (int v : group_a) base += kendall_tau(e, v, order);
                // Cheapest n'/2 of the remaining voters against the reverse.
                std::vector<long long> costs;
                for (int v : rest) costs.push_back(kendall_tau(e, v, reversed));
                std::sort(costs.begin(), costs.end());
                long long total = base;
                for (int k = 0; k < half; ++k) total += costs[static_cast<std::size_t>(k)];
                if (best < 0 || total < best) best = total;
            });
        } while (std::next_permutation(order.begin(), order.end()));
    });
    return best;
}

inline bool single_peaked_on_axis(const std::vector<int>& vote) {
    // Every prefix of the vote must be an interval of the natural axis.
    int lo = vote[0], hi = vote[0];
    for (std::size_t i = 1; i < vote.size(); ++i) {
        if (vote[i] == lo - 1)
            --lo;
        else if (vote[i] == hi + 1)
            ++hi;
        else
            return false;
    }
    return true;
}

inline bool single_peaked_on_circle(const std::vector<int>& vote, int m) {
    // Every prefix must be a contiguous arc mod m.
    std::set<int> seen{vote[0]};
    for (std::size_t i = 1; i < vote.size(); ++i) {
        const int c = vote[i];
        if (!seen.count((c + 1) % m) && !seen.count((c + m - 1) % m)) return false;
        seen.insert(c);
    }
    return true;
}

inline bool single_crossing_in_given_order(const Election& e) {
    for (int a = 0; a < e.num_candidates(); ++a)
        for (int b = 0; b < e.num_candidates(); ++b) {
            if (a == b) continue;
            int flips = 0;
            for (int v = 1; v < e.num_voters(); ++v)
                if (e.prefers(v, a, b) != e.prefers(v - 1, a, b)) ++flips;
            if (flips > 1) return false;
        }
    return true;
}

// Deterministic random elections for property tests.
inline Election random_election(std::mt19937_64& gen, int max_m, int max_n, int min_m = 1,
                                int min_n = 1) {
    const int m = min_m + static_cast<int>(gen() % static_cast<unsigned>(max_m - min_m + 1));
    const int n = min_n + static_cast<int>(gen() % static_cast<unsigned>(max_n - min_n + 1));
    std::vector<std::string> labels;
    for (int c = 0; c < m; ++c) labels.push_back(std::string(1, static_cast<char>('a' + c)));
    std::vector<std::vector<int>> rankings;
    for (int v = 0; v < n; ++v) {
        std::vector<int> vote(static_cast<std::size_t>(m));
        std::iota(vote.begin(), vote.end(), 0);
        for (int i = m - 1; i > 0; --i)
            std::swap(vote[static_cast<std::size_t>(i)],
                      vote[static_cast<std::size_t>(gen() % static_cast<unsigned>(i + 1))]);
        rankings.push_back(std::move(vote));
    }
    return Election(std::move(labels), std::move(rankings));
}

}  // namespace oracles
