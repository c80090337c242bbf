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
#include "subelect/ilp.hpp"
#include "subelect/signature.hpp"

namespace subelect {

// DAG over all candidates with an edge (c, c') iff every voter of the
// generating set prefers c to c'. Being an intersection of total orders it is
// acyclic and transitive.
struct UnanimityGraph {
    int num_candidates = 0;
    std::vector<std::vector<char>> edge;  // edge[a][b] == 1 iff a unanimously beats b

    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> out;
        for (int a = 0; a < num_candidates; ++a)
            for (int b = 0; b < num_candidates; ++b)
                if (edge[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
                    out.emplace_back(a, b);
        return out;
    }
};

inline UnanimityGraph unanimity_graph(const Election& e, const std::vector<int>& voters) {
    if (voters.empty()) throw EmptySelection();
    const int m = e.num_candidates();
    UnanimityGraph g;
    g.num_candidates = m;
    g.edge.assign(static_cast<std::size_t>(m),
                  std::vector<char>(static_cast<std::size_t>(m), 0));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (a == b) continue;
            bool unanimous = true;
            for (int v : voters)
                if (!e.prefers(v, a, b)) {
                    unanimous = false;
                    break;
                }
            g.edge[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = unanimous ? 1 : 0;
        }
    return g;
}

namespace detail {

// Longest path in the unanimity DAG, ties broken toward smaller candidate
// index. The graph is transitive, so a "path" visits a chain directly.
inline std::vector<int> longest_chain(const UnanimityGraph& g) {
    const int m = g.num_candidates;
    std::vector<int> indegree(static_cast<std::size_t>(m), 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (g.edge[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
                ++indegree[static_cast<std::size_t>(b)];

    std::vector<int> order;
    std::vector<char> placed(static_cast<std::size_t>(m), 0);
    for (int step = 0; step < m; ++step) {
        for (int v = 0; v < m; ++v) {
            if (placed[static_cast<std::size_t>(v)] || indegree[static_cast<std::size_t>(v)] != 0)
                continue;
            placed[static_cast<std::size_t>(v)] = 1;
            order.push_back(v);
            for (int b = 0; b < m; ++b)
                if (g.edge[static_cast<std::size_t>(v)][static_cast<std::size_t>(b)])
                    --indegree[static_cast<std::size_t>(b)];
            break;
        }
    }

    std::vector<int> length(static_cast<std::size_t>(m), 1);
    std::vector<int> pred(static_cast<std::size_t>(m), -1);
    for (int v : order)
        for (int p = 0; p < m; ++p) {
            if (!g.edge[static_cast<std::size_t>(p)][static_cast<std::size_t>(v)]) continue;
            const int cand = length[static_cast<std::size_t>(p)] + 1;
            if (cand > length[static_cast<std::size_t>(v)] ||
                (cand == length[static_cast<std::size_t>(v)] &&
                 (pred[static_cast<std::size_t>(v)] == -1 ||
                  p < pred[static_cast<std::size_t>(v)]))) {
                length[static_cast<std::size_t>(v)] = cand;
                pred[static_cast<std::size_t>(v)] = p;
            }
        }

    int end = 0;
    for (int v = 1; v < m; ++v)
        if (length[static_cast<std::size_t>(v)] > length[static_cast<std::size_t>(end)]) end = v;
    std::vector<int> chain;
    for (int v = end; v != -1; v = pred[static_cast<std::size_t>(v)]) chain.push_back(v);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

// Induced order of `candidates` in the voter's ranking (best first).
inline std::vector<int> induced_order(const Election& e, int voter,
                                      const std::vector<int>& candidates) {
    std::vector<int> order = candidates;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return e.position(voter, a) < e.position(voter, b); });
    return order;
}

inline std::map<std::vector<int>, std::vector<int>> group_by_induced_order(
    const Election& e, const std::vector<int>& candidates) {
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int v = 0; v < e.num_voters(); ++v)
        groups[induced_order(e, v, candidates)].push_back(v);
    return groups;
}

}  // namespace detail

// Longest unanimous chain for the given voters, if it has at least
// min_candidates entries (the chain is returned at its full length).
inline std::optional<std::vector<int>> verify_identity_voters(const Election& e,
                                                              const std::vector<int>& voters,
                                                              int min_candidates) {
    if (voters.empty()) throw EmptySelection();
    if (min_candidates < 1 || min_candidates > e.num_candidates())
        throw BadWidth(min_candidates, e.num_candidates());
    std::vector<int> chain = detail::longest_chain(unanimity_graph(e, voters));
    if (static_cast<int>(chain.size()) < min_candidates) return std::nullopt;
    return chain;
}

// Groups voters by their induced order of `candidates`; returns the largest
// group of size >= min_voters together with its order.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> verify_identity_candidates(
    const Election& e, const std::vector<int>& candidates, int min_voters) {
    if (candidates.empty()) throw EmptySelection();
    if (min_voters < 1 || min_voters > e.num_voters())
        throw BadVoterCount(min_voters, e.num_voters());
    const auto groups = detail::group_by_induced_order(e, candidates);
    const std::vector<int>* best_order = nullptr;
    const std::vector<int>* best_group = nullptr;
    for (const auto& [order, group] : groups) {
        if (static_cast<int>(group.size()) < min_voters) continue;
        if (!best_group || group.size() > best_group->size()) {
            best_order = &order;
            best_group = &group;
        }
    }
    if (!best_group) return std::nullopt;
    return std::make_pair(*best_order, *best_group);
}

enum class SearchStrategy { Auto, ByVoters, ByCandidates };
enum class IlpBackend { Internal, None };

struct SearchOptions {
    std::uint64_t subset_budget = 5'000'000;   // enumerated subsets
    std::uint64_t ilp_node_budget = 20'000'000;
    IlpBackend backend = IlpBackend::Internal;
};

namespace detail {

// Cost estimates from the parameterized drivers: enumerating voter subsets
// costs C(n,n') * n' * m^2, candidate subsets C(m,m') * n * m.
inline mpz_class by_voters_cost(const Election& e, int n_prime) {
    return binomial(static_cast<unsigned long>(e.num_voters()),
                    static_cast<unsigned long>(n_prime)) *
           n_prime * e.num_candidates() * e.num_candidates();
}

inline mpz_class by_candidates_cost(const Election& e, int m_prime) {
    return binomial(static_cast<unsigned long>(e.num_candidates()),
                    static_cast<unsigned long>(m_prime)) *
           e.num_voters() * e.num_candidates();
}

inline bool subsets_within_budget(const Election& e, bool over_voters, int size,
                                  const SearchOptions& opts) {
    const mpz_class count =
        over_voters ? binomial(static_cast<unsigned long>(e.num_voters()),
                               static_cast<unsigned long>(size))
                    : binomial(static_cast<unsigned long>(e.num_candidates()),
                               static_cast<unsigned long>(size));
    return count <= opts.subset_budget;
}

inline void check_sizes(const Election& e, int m_prime, int n_prime) {
    if (m_prime < 1 || m_prime > e.num_candidates()) throw BadWidth(m_prime, e.num_candidates());
    if (n_prime < 1 || n_prime > e.num_voters()) throw BadVoterCount(n_prime, e.num_voters());
}

}  // namespace detail

// Searches for an identity subelection of size at least (m_prime, n_prime).
// ByVoters enumerates voter subsets, ByCandidates candidate subsets; Auto
// picks the cheaper side and may fall back to the internal ILP when both
// enumerations exceed the subset budget.
inline std::optional<SubelectionWitness> hidden_id(const Election& e, int m_prime, int n_prime,
                                                   SearchStrategy strategy = SearchStrategy::Auto,
                                                   const SearchOptions& opts = {}) {
    detail::check_sizes(e, m_prime, n_prime);

    bool over_voters;
    bool ilp_allowed = false;
    switch (strategy) {
        case SearchStrategy::ByVoters: over_voters = true; break;
        case SearchStrategy::ByCandidates: over_voters = false; break;
        case SearchStrategy::Auto:
            over_voters = detail::by_voters_cost(e, n_prime) <=
                          detail::by_candidates_cost(e, m_prime);
            ilp_allowed = opts.backend == IlpBackend::Internal;
            break;
    }

    if (!detail::subsets_within_budget(e, over_voters, over_voters ? n_prime : m_prime, opts)) {
        if (!ilp_allowed) throw BudgetExceeded("subset enumeration too large");
        const IlpModel model = build_hidden_id(e, m_prime, n_prime);
        const IlpSolution sol = solve(model, opts.ilp_node_budget);
        if (sol.status == IlpStatus::BudgetExceededStatus)
            throw BudgetExceeded("ILP node budget exhausted");
        if (sol.status != IlpStatus::Optimal || sol.objective_value != 0) return std::nullopt;
        return decode_witness(model, sol);
    }

    if (over_voters) {
        std::vector<int> voters = first_combination(e.num_voters(), n_prime);
        do {
            if (auto chain = verify_identity_voters(e, voters, m_prime)) {
                SubelectionWitness w;
                w.kind = WitnessKind::Identity;
                w.candidates = std::move(*chain);
                w.voters = voters;
                return w;
            }
        } while (next_combination(voters, e.num_voters()));
    } else {
        std::vector<int> cands = first_combination(e.num_candidates(), m_prime);
        do {
            if (auto found = verify_identity_candidates(e, cands, n_prime)) {
                SubelectionWitness w;
                w.kind = WitnessKind::Identity;
                w.candidates = std::move(found->first);
                w.voters = std::move(found->second);
                return w;
            }
        } while (next_combination(cands, e.num_candidates()));
    }
    return std::nullopt;
}

// Number of size-m' candidate sets ranked identically by all given voters:
// chain counting over the unanimity DAG, DP[v][j] = chains of length j ending
// at v.
inline mpz_class count_identity_candidate_subsets(const Election& e,
                                                  const std::vector<int>& voters, int m_prime) {
    if (voters.empty()) throw EmptySelection();
    if (m_prime < 1) throw BadWidth(m_prime, e.num_candidates());
    if (m_prime > e.num_candidates()) return 0;
    const UnanimityGraph g = unanimity_graph(e, voters);
    const int m = g.num_candidates;

    // Process candidates in any topological order; position sums give one.
    std::vector<int> order(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) order[static_cast<std::size_t>(i)] = i;
    std::vector<long long> rank_sum(static_cast<std::size_t>(m), 0);
    for (int v : voters)
        for (int c = 0; c < m; ++c) rank_sum[static_cast<std::size_t>(c)] += e.position(v, c);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return rank_sum[static_cast<std::size_t>(a)] < rank_sum[static_cast<std::size_t>(b)];
    });

    std::vector<std::vector<mpz_class>> dp(
        static_cast<std::size_t>(m),
        std::vector<mpz_class>(static_cast<std::size_t>(m_prime + 1), 0));
    for (int v : order) {
        dp[static_cast<std::size_t>(v)][1] = 1;
        for (int p = 0; p < m; ++p) {
            if (!g.edge[static_cast<std::size_t>(p)][static_cast<std::size_t>(v)]) continue;
            for (int j = 2; j <= m_prime; ++j)
                dp[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)] +=
                    dp[static_cast<std::size_t>(p)][static_cast<std::size_t>(j - 1)];
        }
    }
    mpz_class total = 0;
    for (int v = 0; v < m; ++v)
        total += dp[static_cast<std::size_t>(v)][static_cast<std::size_t>(m_prime)];
    return total;
}

// Number of size-n' voter sets ranking the given candidates identically:
// sum of C(group size, n') over the induced-order groups.
inline mpz_class count_identity_voter_subsets(const Election& e,
                                              const std::vector<int>& candidates, int n_prime) {
    if (candidates.empty()) throw EmptySelection();
    if (n_prime < 1) throw BadVoterCount(n_prime, e.num_voters());
    mpz_class total = 0;
    for (const auto& [order, group] : detail::group_by_induced_order(e, candidates))
        total += binomial(group.size(), static_cast<unsigned long>(n_prime));
    return total;
}

// Number of (voter set, candidate set) pairs of exact sizes (n', m') forming
// an identity subelection.
inline mpz_class count_hidden_id(const Election& e, int m_prime, int n_prime,
                                 SearchStrategy strategy = SearchStrategy::Auto,
                                 const SearchOptions& opts = {}) {
    if (m_prime < 1) throw BadWidth(m_prime, e.num_candidates());
    if (n_prime < 1) throw BadVoterCount(n_prime, e.num_voters());
    if (m_prime > e.num_candidates() || n_prime > e.num_voters()) return 0;

    bool over_voters;
    switch (strategy) {
        case SearchStrategy::ByVoters: over_voters = true; break;
        case SearchStrategy::ByCandidates: over_voters = false; break;
        case SearchStrategy::Auto:
            over_voters = detail::by_voters_cost(e, n_prime) <=
                          detail::by_candidates_cost(e, m_prime);
            break;
    }
    if (!detail::subsets_within_budget(e, over_voters, over_voters ? n_prime : m_prime, opts))
        throw BudgetExceeded("subset enumeration too large for counting");

    mpz_class total = 0;
    if (over_voters) {
        std::vector<int> voters = first_combination(e.num_voters(), n_prime);
        do {
            total += count_identity_candidate_subsets(e, voters, m_prime);
        } while (next_combination(voters, e.num_voters()));
    } else {
        std::vector<int> cands = first_combination(e.num_candidates(), m_prime);
        do {
            total += count_identity_voter_subsets(e, cands, n_prime);
        } while (next_combination(cands, e.num_candidates()));
    }
    return total;
}

// Largest n' admitting an identity subelection with m_prime candidates.
// Candidate-subset enumeration when within budget, ILP otherwise.
inline std::pair<int, SubelectionWitness> max_id(const Election& e, int m_prime,
                                                 const SearchOptions& opts = {}) {
    if (m_prime < 1 || m_prime > e.num_candidates())
        throw BadWidth(m_prime, e.num_candidates());

    if (detail::subsets_within_budget(e, false, m_prime, opts)) {
        int best = 0;
        SubelectionWitness w;
        w.kind = WitnessKind::Identity;
        std::vector<int> cands = first_combination(e.num_candidates(), m_prime);
        do {
            for (const auto& [order, group] : detail::group_by_induced_order(e, cands)) {
                if (static_cast<int>(group.size()) > best) {
                    best = static_cast<int>(group.size());
                    w.candidates = order;
                    w.voters = group;
                }
            }
            if (best == e.num_voters()) break;
        } while (next_combination(cands, e.num_candidates()));
        return {best, std::move(w)};
    }

    if (opts.backend != IlpBackend::Internal)
        throw BudgetExceeded("candidate enumeration too large and no ILP backend accepted");
    const IlpModel model = build_max_id(e, m_prime);
    const IlpSolution sol = solve(model, opts.ilp_node_budget);
    if (sol.status != IlpStatus::Optimal) throw BudgetExceeded("ILP node budget exhausted");
    return {static_cast<int>(sol.objective_value), decode_witness(model, sol)};
}

// Pareto frontier of {(m', max_id(e, m'))}. The endpoints are analytic:
// (1, n) always holds and m' = m is the largest duplicate-vote group.
inline Signature identity_signature(const Election& e, const SearchOptions& opts = {}) {
    const int m = e.num_candidates(), n = e.num_voters();
    std::vector<std::pair<int, int>> points;
    points.emplace_back(1, n);
    if (m > 1) {
        std::map<std::vector<int>, int> full_groups;
        for (int v = 0; v < n; ++v) ++full_groups[e.ranking(v)];
        int full = 0;
        for (const auto& [row, count] : full_groups) full = std::max(full, count);
        points.emplace_back(m, full);
    }
    for (int m_prime = 2; m_prime < m; ++m_prime)
        points.emplace_back(m_prime, max_id(e, m_prime, opts).first);
    return pareto_frontier(std::move(points));
}

}  // namespace subelect
