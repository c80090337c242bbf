#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "subelect/combinatorics.hpp"
#include "subelect/election.hpp"
#include "subelect/errors.hpp"
#include "subelect/identity.hpp"
#include "subelect/ilp.hpp"
#include "subelect/signature.hpp"

namespace subelect {

// Voters keyed by the order they induce on a fixed candidate set.
struct PermGroupTable {
    std::map<std::vector<int>, std::vector<int>> groups;
};

inline PermGroupTable perm_group_table(const Election& e, const std::vector<int>& candidates) {
    if (candidates.empty()) throw EmptySelection();
    PermGroupTable table;
    table.groups = detail::group_by_induced_order(e, candidates);
    return table;
}

namespace detail {

// Witness orders are canonicalized so the first candidate index is smaller
// than the last; flipping the order swaps the groups.
inline void canonicalize_antagonism(SubelectionWitness& w) {
    if (w.candidates.size() >= 2 && w.candidates.front() > w.candidates.back()) {
        std::reverse(w.candidates.begin(), w.candidates.end());
        std::swap(w.group_a, w.group_b);
    }
    std::sort(w.group_a.begin(), w.group_a.end());
    std::sort(w.group_b.begin(), w.group_b.end());
    w.voters = w.group_a;
    w.voters.insert(w.voters.end(), w.group_b.begin(), w.group_b.end());
    std::sort(w.voters.begin(), w.voters.end());
}

inline SubelectionWitness make_antagonism_witness(std::vector<int> order, std::vector<int> group_a,
                                                  std::vector<int> group_b) {
    SubelectionWitness w;
    w.kind = WitnessKind::Antagonism;
    w.candidates = std::move(order);
    w.group_a = std::move(group_a);
    w.group_b = std::move(group_b);
    canonicalize_antagonism(w);
    return w;
}

}  // namespace detail

// Endpoint-pair reduction: guess the first and last candidate (c_b, c_e) of
// the antagonism order, require the voters to split evenly on them, keep only
// candidates lying strictly between the endpoints in every vote, reverse the
// minority-orientation votes and look for a unanimous chain.
inline std::optional<SubelectionWitness> verify_antagonism_voters(const Election& e,
                                                                  const std::vector<int>& voters,
                                                                  int m_prime) {
    if (voters.empty()) throw EmptySelection();
    if (voters.size() % 2 != 0) throw OddVoterCount(static_cast<int>(voters.size()));
    const int m = e.num_candidates();
    if (m_prime < 1 || m_prime > m) throw BadWidth(m_prime, m);

    std::vector<int> vs = voters;
    std::sort(vs.begin(), vs.end());

    if (m_prime == 1) {
        std::vector<int> a(vs.begin(), vs.begin() + vs.size() / 2);
        std::vector<int> b(vs.begin() + vs.size() / 2, vs.end());
        return detail::make_antagonism_witness({0}, std::move(a), std::move(b));
    }

    for (int cb = 0; cb < m; ++cb) {
        for (int ce = cb + 1; ce < m; ++ce) {
            std::vector<int> forward, backward;
            for (int v : vs) (e.prefers(v, cb, ce) ? forward : backward).push_back(v);
            if (forward.size() != backward.size()) continue;

            std::vector<int> kept;
            for (int c = 0; c < m; ++c) {
                if (c == cb || c == ce) {
                    kept.push_back(c);
                    continue;
                }
                bool between = true;
                for (int v : vs) {
                    const int lo = std::min(e.position(v, cb), e.position(v, ce));
                    const int hi = std::max(e.position(v, cb), e.position(v, ce));
                    if (!(lo < e.position(v, c) && e.position(v, c) < hi)) {
                        between = false;
                        break;
                    }
                }
                if (between) kept.push_back(c);
            }
            if (static_cast<int>(kept.size()) < m_prime) continue;

            // Unanimity over the kept candidates with backward votes reversed.
            UnanimityGraph g;
            g.num_candidates = static_cast<int>(kept.size());
            g.edge.assign(kept.size(), std::vector<char>(kept.size(), 0));
            for (std::size_t ai = 0; ai < kept.size(); ++ai)
                for (std::size_t bi = 0; bi < kept.size(); ++bi) {
                    if (ai == bi) continue;
                    bool unanimous = true;
                    for (int v : forward)
                        if (!e.prefers(v, kept[ai], kept[bi])) {
                            unanimous = false;
                            break;
                        }
                    if (unanimous)
                        for (int v : backward)
                            if (!e.prefers(v, kept[bi], kept[ai])) {
                                unanimous = false;
                                break;
                            }
                    g.edge[ai][bi] = unanimous ? 1 : 0;
                }
            std::vector<int> chain = detail::longest_chain(g);
            if (static_cast<int>(chain.size()) < m_prime) continue;
            std::vector<int> order;
            for (int local : chain) order.push_back(kept[static_cast<std::size_t>(local)]);
            return detail::make_antagonism_witness(std::move(order), std::move(forward),
                                                   std::move(backward));
        }
    }
    return std::nullopt;
}

// Permutation grouping: some induced order and its reverse must each be held
// by at least n'/2 voters; exactly n'/2 are taken from each side, ascending.
inline std::optional<SubelectionWitness> verify_antagonism_candidates(
    const Election& e, const std::vector<int>& candidates, int n_prime) {
    if (candidates.empty()) throw EmptySelection();
    if (n_prime < 1 || n_prime > e.num_voters()) throw BadVoterCount(n_prime, e.num_voters());
    if (n_prime % 2 != 0) throw OddVoterCount(n_prime);

    const PermGroupTable table = perm_group_table(e, candidates);
    const int half = n_prime / 2;
    for (const auto& [order, group] : table.groups) {
        std::vector<int> reversed(order.rbegin(), order.rend());
        if (order == reversed) {  // single candidate
            if (static_cast<int>(group.size()) < n_prime) continue;
            std::vector<int> a(group.begin(), group.begin() + half);
            std::vector<int> b(group.begin() + half, group.begin() + n_prime);
            return detail::make_antagonism_witness(order, std::move(a), std::move(b));
        }
        if (reversed < order) continue;  // handled from the lexicographically smaller side
        auto rev_it = table.groups.find(reversed);
        if (rev_it == table.groups.end()) continue;
        if (static_cast<int>(group.size()) < half ||
            static_cast<int>(rev_it->second.size()) < half)
            continue;
        std::vector<int> a(group.begin(), group.begin() + half);
        std::vector<int> b(rev_it->second.begin(), rev_it->second.begin() + half);
        return detail::make_antagonism_witness(order, std::move(a), std::move(b));
    }
    return std::nullopt;
}

// Searches for an antagonism subelection of size at least (m_prime, n_prime),
// n_prime even. Same driver structure as hidden_id.
inline std::optional<SubelectionWitness> hidden_an(const Election& e, int m_prime, int n_prime,
                                                   SearchStrategy strategy = SearchStrategy::Auto,
                                                   const SearchOptions& opts = {}) {
    detail::check_sizes(e, m_prime, n_prime);
    if (n_prime % 2 != 0) throw OddVoterCount(n_prime);

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
        const IlpModel model = build_hidden_an(e, m_prime, n_prime);
        const IlpSolution sol = solve(model, opts.ilp_node_budget);
        if (sol.status == IlpStatus::BudgetExceededStatus)
            throw BudgetExceeded("ILP node budget exhausted");
        if (sol.status != IlpStatus::Optimal || sol.objective_value != 0) return std::nullopt;
        return decode_witness(model, sol);
    }

    if (over_voters) {
        std::vector<int> voters = first_combination(e.num_voters(), n_prime);
        do {
            if (auto w = verify_antagonism_voters(e, voters, m_prime)) return w;
        } while (next_combination(voters, e.num_voters()));
    } else {
        std::vector<int> cands = first_combination(e.num_candidates(), m_prime);
        do {
            if (auto w = verify_antagonism_candidates(e, cands, n_prime)) return w;
        } while (next_combination(cands, e.num_candidates()));
    }
    return std::nullopt;
}

enum class AntagonismVariant { Rigid, Sum, Product };

struct MaxAnResult {
    long long score = 0;
    std::optional<SubelectionWitness> witness;  // absent when the score is 0
};

// Best antagonism score over all m_prime-sized candidate sets and realized
// orders. Rigid truncates to balanced groups (score 2*min); Sum and Product
// keep both full groups and may return unbalanced witnesses.
inline MaxAnResult max_an(const Election& e, int m_prime,
                          AntagonismVariant variant = AntagonismVariant::Rigid,
                          const SearchOptions& opts = {}) {
    const int m = e.num_candidates();
    if (m_prime < 1 || m_prime > m) throw BadWidth(m_prime, m);

    if (!detail::subsets_within_budget(e, false, m_prime, opts)) {
        if (variant != AntagonismVariant::Rigid)
            throw BudgetExceeded("sum/product variants are exact only under enumeration");
        if (opts.backend != IlpBackend::Internal)
            throw BudgetExceeded("candidate enumeration too large and no ILP backend accepted");
        const IlpModel model = build_max_an(e, m_prime);
        const IlpSolution sol = solve(model, opts.ilp_node_budget);
        if (sol.status != IlpStatus::Optimal) throw BudgetExceeded("ILP node budget exhausted");
        MaxAnResult out;
        out.score = sol.objective_value;
        if (out.score > 0) out.witness = decode_witness(model, sol);
        return out;
    }

    MaxAnResult best;
    std::vector<int> cands = first_combination(m, m_prime);
    do {
        const auto groups = detail::group_by_induced_order(e, cands);
        for (const auto& [order, group] : groups) {
            std::vector<int> reversed(order.rbegin(), order.rend());
            long long score = 0;
            const std::vector<int>* other = nullptr;
            if (order == reversed) {  // m_prime == 1
                const long long b = static_cast<long long>(group.size());
                switch (variant) {
                    case AntagonismVariant::Rigid: score = 2 * (b / 2); break;
                    case AntagonismVariant::Sum: score = b; break;
                    case AntagonismVariant::Product: score = (b / 2) * ((b + 1) / 2); break;
                }
            } else {
                if (reversed < order) continue;
                auto it = groups.find(reversed);
                if (it == groups.end()) continue;
                other = &it->second;
                const long long b = static_cast<long long>(group.size());
                const long long r = static_cast<long long>(other->size());
                switch (variant) {
                    case AntagonismVariant::Rigid: score = 2 * std::min(b, r); break;
                    case AntagonismVariant::Sum: score = b + r; break;
                    case AntagonismVariant::Product: score = b * r; break;
                }
            }
            if (score <= best.score) continue;
            best.score = score;
            std::vector<int> a, bg;
            if (!other) {
                const std::size_t half = group.size() / 2;
                a.assign(group.begin(), group.begin() + static_cast<std::ptrdiff_t>(half));
                bg.assign(group.begin() + static_cast<std::ptrdiff_t>(half),
                          variant == AntagonismVariant::Rigid
                              ? group.begin() + static_cast<std::ptrdiff_t>(2 * half)
                              : group.end());
            } else if (variant == AntagonismVariant::Rigid) {
                const std::size_t half = static_cast<std::size_t>(best.score / 2);
                a.assign(group.begin(), group.begin() + static_cast<std::ptrdiff_t>(half));
                bg.assign(other->begin(), other->begin() + static_cast<std::ptrdiff_t>(half));
            } else {
                a = group;
                bg = *other;
            }
            best.witness = detail::make_antagonism_witness(order, std::move(a), std::move(bg));
        }
    } while (next_combination(cands, m));
    if (best.score == 0) best.witness.reset();
    return best;
}

// Pareto frontier of {(m', max_an rigid)}, dropping zero scores. The m' = 1
// point is analytic: any 2*floor(n/2) voters split over a single candidate.
inline Signature antagonism_signature(const Election& e, const SearchOptions& opts = {}) {
    const int n = e.num_voters();
    std::vector<std::pair<int, int>> points;
    if (n >= 2) points.emplace_back(1, 2 * (n / 2));
    for (int m_prime = 2; m_prime <= e.num_candidates(); ++m_prime) {
        const long long score = max_an(e, m_prime, AntagonismVariant::Rigid, opts).score;
        if (score > 0) points.emplace_back(m_prime, static_cast<int>(score));
    }
    return pareto_frontier(std::move(points));
}

}  // namespace subelect
