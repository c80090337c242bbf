#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "subelect/election.hpp"
#include "subelect/errors.hpp"
#include "subelect/rng.hpp"

namespace subelect {

enum class CultureKind {
    Impartial,
    Urn,
    Mallows,
    SpConitzer,
    SpWalsh,
    Spoc,
    SingleCrossing,
    Euclidean,
    GsBalanced,
    GsCaterpillar,
    CompassId,
    CompassAn,
};

enum class EuclideanDomain { Line, Square, Cube, Circle };

struct CultureSpec {
    CultureKind kind = CultureKind::Impartial;
    int num_candidates = 0;
    int num_voters = 0;
    std::uint64_t seed = 0;
    double alpha = 1.0;                            // urn contagion
    double phi = 0.5;                              // mallows dispersion
    bool normalized = false;                       // interpret phi as norm-phi
    EuclideanDomain domain = EuclideanDomain::Line;
};

inline const std::map<std::string, CultureKind>& culture_names() {
    static const std::map<std::string, CultureKind> names = {
        {"impartial", CultureKind::Impartial},
        {"urn", CultureKind::Urn},
        {"mallows", CultureKind::Mallows},
        {"sp_conitzer", CultureKind::SpConitzer},
        {"sp_walsh", CultureKind::SpWalsh},
        {"spoc", CultureKind::Spoc},
        {"single_crossing", CultureKind::SingleCrossing},
        {"euclidean", CultureKind::Euclidean},
        {"gs_balanced", CultureKind::GsBalanced},
        {"gs_caterpillar", CultureKind::GsCaterpillar},
        {"compass_id", CultureKind::CompassId},
        {"compass_an", CultureKind::CompassAn},
    };
    return names;
}

namespace detail {

inline std::vector<std::string> default_labels(int m) {
    std::vector<std::string> labels;
    for (int c = 0; c < m; ++c) labels.push_back("c" + std::to_string(c + 1));
    return labels;
}

inline std::vector<int> random_permutation(int m, SplitMix64& rng) {
    std::vector<int> p(static_cast<std::size_t>(m));
    std::iota(p.begin(), p.end(), 0);
    for (int i = m - 1; i > 0; --i)
        std::swap(p[static_cast<std::size_t>(i)],
                  p[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i) + 1))]);
    return p;
}

// Expected number of inversions of the repeated-insertion model at phi.
inline double mallows_expected_swaps(double phi, int m) {
    double total = 0.0;
    for (int i = 2; i <= m; ++i) {
        double z = 0.0, weighted = 0.0, power = 1.0;
        for (int t = 0; t < i; ++t) {
            z += power;
            weighted += t * power;
            power *= phi;
        }
        total += weighted / z;
    }
    return total;
}

// Inverts the expected-swap normalization: finds phi in [0,1] whose expected
// inversion count is norm_phi * C(m,2)/2.
inline double mallows_phi_from_norm(double norm_phi, int m) {
    if (norm_phi <= 0.0) return 0.0;
    if (norm_phi >= 1.0) return 1.0;
    const double target = norm_phi * (static_cast<double>(m) * (m - 1) / 2.0) / 2.0;
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-9) {
        const double mid = (lo + hi) / 2.0;
        if (mallows_expected_swaps(mid, m) < target)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2.0;
}

inline std::vector<int> mallows_vote(int m, double phi, SplitMix64& rng) {
    std::vector<int> vote;
    vote.reserve(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
        // Insert candidate i-1 at position j (1-based from the top) with
        // probability phi^(i-j) / sum_t phi^t.
        double z = 0.0, power = 1.0;
        std::vector<double> weight(static_cast<std::size_t>(i));
        for (int j = i; j >= 1; --j) {
            weight[static_cast<std::size_t>(j - 1)] = power;
            z += power;
            power *= phi;
        }
        double draw = rng.next_real() * z;
        int chosen = i;
        for (int j = 1; j <= i; ++j) {
            draw -= weight[static_cast<std::size_t>(j - 1)];
            if (draw < 0) {
                chosen = j;
                break;
            }
        }
        vote.insert(vote.begin() + (chosen - 1), i - 1);
    }
    return vote;
}

inline std::vector<int> sp_conitzer_vote(int m, SplitMix64& rng) {
    const int peak = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
    std::vector<int> vote{peak};
    int left = peak - 1, right = peak + 1;
    while (left >= 0 || right < m) {
        if (left >= 0 && right < m) {
            if (rng.coin()) vote.push_back(left--); else vote.push_back(right++);
        } else if (left >= 0) {
            vote.push_back(left--);
        } else {
            vote.push_back(right++);
        }
    }
    return vote;
}

inline std::vector<int> sp_walsh_vote(int m, SplitMix64& rng) {
    // Bottom-up: repeatedly take one of the two current axis extremes.
    std::vector<int> bottom_up;
    int left = 0, right = m - 1;
    while (left < right) {
        if (rng.coin()) bottom_up.push_back(left++); else bottom_up.push_back(right--);
    }
    bottom_up.push_back(left);
    return {bottom_up.rbegin(), bottom_up.rend()};
}

inline std::vector<int> spoc_vote(int m, SplitMix64& rng) {
    const int peak = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
    std::vector<int> vote{peak};
    int cw = 1, ccw = 1;  // arc extent on each side of the peak
    while (static_cast<int>(vote.size()) < m) {
        if (rng.coin())
            vote.push_back(((peak + cw++) % m + m) % m);
        else
            vote.push_back(((peak - ccw++) % m + m) % m);
    }
    return vote;
}

inline std::vector<std::vector<int>> single_crossing_votes(int m, int n, SplitMix64& rng) {
    // A maximal chain of adjacent transpositions from the identity order to
    // its reverse, sampled one uniformly random valid step at a time; votes
    // are snapshots at sorted random chain positions.
    const int steps = m * (m - 1) / 2;
    std::vector<int> positions;
    for (int i = 0; i < n; ++i)
        positions.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(steps) + 1)));
    std::sort(positions.begin(), positions.end());

    std::vector<std::vector<int>> votes;
    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::size_t next_voter = 0;
    for (int step = 0; step <= steps; ++step) {
        while (next_voter < positions.size() && positions[next_voter] == step) {
            votes.push_back(order);
            ++next_voter;
        }
        if (step == steps) break;
        std::vector<int> ascending;
        for (int i = 0; i + 1 < m; ++i)
            if (order[static_cast<std::size_t>(i)] < order[static_cast<std::size_t>(i + 1)])
                ascending.push_back(i);
        const int pick =
            ascending[static_cast<std::size_t>(rng.below(ascending.size()))];
        std::swap(order[static_cast<std::size_t>(pick)],
                  order[static_cast<std::size_t>(pick + 1)]);
    }
    return votes;
}

struct EuclideanPoints {
    std::vector<std::vector<double>> candidates;
    std::vector<std::vector<double>> voters;
};

// Candidate points first, then voter points, all from one stream; tests
// regenerate them to check the distance ordering.
inline EuclideanPoints euclidean_points(int m, int n, EuclideanDomain domain, SplitMix64& rng) {
    const int dim = domain == EuclideanDomain::Line     ? 1
                    : domain == EuclideanDomain::Square ? 2
                    : domain == EuclideanDomain::Cube   ? 3
                                                        : 2;
    auto draw_point = [&]() {
        std::vector<double> p;
        if (domain == EuclideanDomain::Circle) {
            const double angle = rng.next_real() * 2.0 * 3.14159265358979323846;
            p = {std::cos(angle), std::sin(angle)};
        } else {
            for (int d = 0; d < dim; ++d) p.push_back(rng.next_real());
        }
        return p;
    };
    EuclideanPoints pts;
    for (int c = 0; c < m; ++c) pts.candidates.push_back(draw_point());
    for (int v = 0; v < n; ++v) pts.voters.push_back(draw_point());
    return pts;
}

inline std::vector<int> vote_by_distance(const std::vector<double>& voter,
                                         const std::vector<std::vector<double>>& candidates) {
    std::vector<int> vote(candidates.size());
    std::iota(vote.begin(), vote.end(), 0);
    auto dist2 = [&](int c) {
        double s = 0.0;
        for (std::size_t d = 0; d < voter.size(); ++d) {
            const double diff = voter[d] - candidates[static_cast<std::size_t>(c)][d];
            s += diff * diff;
        }
        return s;
    };
    std::sort(vote.begin(), vote.end(), [&](int a, int b) {
        const double da = dist2(a), db = dist2(b);
        if (da != db) return da < db;
        return a < b;
    });
    return vote;
}

// Group-separable vote: candidates are the leaves of a tree in axis order;
// each internal node's child order flips independently with probability 1/2.
// `balanced` is a perfect binary tree, otherwise a caterpillar.
inline std::vector<int> gs_vote(int m, bool balanced, SplitMix64& rng) {
    std::vector<int> vote;
    vote.reserve(static_cast<std::size_t>(m));
    if (balanced) {
        auto emit = [&](auto&& self, int lo, int hi) -> void {
            if (lo == hi) {
                vote.push_back(lo);
                return;
            }
            const int mid = (lo + hi) / 2;
            if (rng.coin()) {
                self(self, mid + 1, hi);
                self(self, lo, mid);
            } else {
                self(self, lo, mid);
                self(self, mid + 1, hi);
            }
        };
        emit(emit, 0, m - 1);
    } else {
        auto emit = [&](auto&& self, int lo) -> void {
            if (lo == m - 1) {
                vote.push_back(lo);
                return;
            }
            if (rng.coin()) {
                self(self, lo + 1);
                vote.push_back(lo);
            } else {
                vote.push_back(lo);
                self(self, lo + 1);
            }
        };
        emit(emit, 0);
    }
    return vote;
}

}  // namespace detail

inline void validate_spec(const CultureSpec& spec) {
    if (spec.num_candidates < 1) throw InvalidSpec("need at least one candidate");
    if (spec.num_voters < 1) throw InvalidSpec("need at least one voter");
    switch (spec.kind) {
        case CultureKind::Urn:
            if (spec.alpha < 0.0) throw InvalidSpec("urn alpha must be nonnegative");
            break;
        case CultureKind::Mallows:
            if (spec.phi < 0.0 || spec.phi > 1.0) throw InvalidSpec("phi must lie in [0,1]");
            break;
        case CultureKind::GsBalanced: {
            const int m = spec.num_candidates;
            if ((m & (m - 1)) != 0) throw InvalidSpec("gs_balanced needs a power-of-two m");
            break;
        }
        case CultureKind::CompassAn:
            if (spec.num_voters % 2 != 0) throw InvalidSpec("compass_an needs an even n");
            break;
        default: break;
    }
}

inline Election sample(const CultureSpec& spec) {
    validate_spec(spec);
    const int m = spec.num_candidates, n = spec.num_voters;
    std::vector<std::vector<int>> votes;
    votes.reserve(static_cast<std::size_t>(n));

    switch (spec.kind) {
        case CultureKind::Impartial: {
            for (int v = 0; v < n; ++v) {
                SplitMix64 rng(derive_seed(spec.seed, static_cast<std::uint64_t>(v)));
                votes.push_back(detail::random_permutation(m, rng));
            }
            break;
        }
        case CultureKind::Urn: {
            SplitMix64 rng(spec.seed);
            for (int k = 0; k < n; ++k) {
                const double fresh = 1.0 / (1.0 + k * spec.alpha);
                if (k == 0 || rng.next_real() < fresh)
                    votes.push_back(detail::random_permutation(m, rng));
                else
                    votes.push_back(votes[rng.below(static_cast<std::uint64_t>(k))]);
            }
            break;
        }
        case CultureKind::Mallows: {
            const double phi =
                spec.normalized ? detail::mallows_phi_from_norm(spec.phi, m) : spec.phi;
            for (int v = 0; v < n; ++v) {
                SplitMix64 rng(derive_seed(spec.seed, static_cast<std::uint64_t>(v)));
                votes.push_back(detail::mallows_vote(m, phi, rng));
            }
            break;
        }
        case CultureKind::SpConitzer: {
            SplitMix64 rng(spec.seed);
            for (int v = 0; v < n; ++v) votes.push_back(detail::sp_conitzer_vote(m, rng));
            break;
        }
        case CultureKind::SpWalsh: {
            SplitMix64 rng(spec.seed);
            for (int v = 0; v < n; ++v) votes.push_back(detail::sp_walsh_vote(m, rng));
            break;
        }
        case CultureKind::Spoc: {
            SplitMix64 rng(spec.seed);
            for (int v = 0; v < n; ++v) votes.push_back(detail::spoc_vote(m, rng));
            break;
        }
        case CultureKind::SingleCrossing: {
            SplitMix64 rng(spec.seed);
            votes = detail::single_crossing_votes(m, n, rng);
            break;
        }
        case CultureKind::Euclidean: {
            SplitMix64 rng(spec.seed);
            const auto pts = detail::euclidean_points(m, n, spec.domain, rng);
            for (int v = 0; v < n; ++v)
                votes.push_back(detail::vote_by_distance(pts.voters[static_cast<std::size_t>(v)],
                                                         pts.candidates));
            break;
        }
        case CultureKind::GsBalanced:
        case CultureKind::GsCaterpillar: {
            SplitMix64 rng(spec.seed);
            for (int v = 0; v < n; ++v)
                votes.push_back(detail::gs_vote(m, spec.kind == CultureKind::GsBalanced, rng));
            break;
        }
        case CultureKind::CompassId: {
            std::vector<int> base(static_cast<std::size_t>(m));
            std::iota(base.begin(), base.end(), 0);
            votes.assign(static_cast<std::size_t>(n), base);
            break;
        }
        case CultureKind::CompassAn: {
            std::vector<int> base(static_cast<std::size_t>(m));
            std::iota(base.begin(), base.end(), 0);
            std::vector<int> reversed(base.rbegin(), base.rend());
            for (int v = 0; v < n; ++v) votes.push_back(v < n / 2 ? base : reversed);
            break;
        }
    }
    return Election(detail::default_labels(m), std::move(votes));
}

inline std::vector<Election> sample_batch(const CultureSpec& spec, int count) {
    validate_spec(spec);
    if (count < 1) throw InvalidSpec("batch count must be positive");
    std::vector<Election> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        CultureSpec element = spec;
        element.seed = derive_seed(spec.seed, static_cast<std::uint64_t>(i));
        out.push_back(sample(element));
    }
    return out;
}

}  // namespace subelect
