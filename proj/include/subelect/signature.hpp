#pragma once

#include <algorithm>
#include <utility>
#include <vector>

namespace subelect {

// Pareto frontier of achievable (candidate count, voter count) pairs, sorted
// by candidate count ascending.
struct Signature {
    std::vector<std::pair<int, int>> points;

    friend bool operator==(const Signature&, const Signature&) = default;
};

inline Signature pareto_frontier(std::vector<std::pair<int, int>> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    Signature sig;
    for (const auto& p : points) {
        bool dominated = false;
        for (const auto& q : points) {
            if (q == p) continue;
            if (q.first >= p.first && q.second >= p.second) {
                dominated = true;
                break;
            }
        }
        if (!dominated) sig.points.push_back(p);
    }
    return sig;
}

}  // namespace subelect
