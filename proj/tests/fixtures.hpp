#pragma once

#include <string>
#include <vector>

#include "subelect/election.hpp"

namespace fixtures {

// The six-voter, six-candidate worked profile used throughout the suite.
inline const char* kExample1 =
    "6 6\n"
    "a\nb\nc\nd\ne\nf\n"
    "a > b > c > f > e > d\n"
    "c > b > a > d > e > f\n"
    "a > f > e > b > c > d\n"
    "d > e > f > c > b > a\n"
    "a > c > b > d > e > f\n"
    "f > e > a > b > c > d\n";

inline subelect::Election example1() { return subelect::parse_election(kExample1); }

// Builds an election from one string per voter, one letter per candidate
// ('a' == 0). Convenient for small hand-written profiles.
inline subelect::Election from_rows(const std::vector<std::string>& rows) {
    int m = static_cast<int>(rows.at(0).size());
    std::vector<std::string> labels;
    for (int c = 0; c < m; ++c) labels.push_back(std::string(1, static_cast<char>('a' + c)));
    std::vector<std::vector<int>> rankings;
    for (const std::string& row : rows) {
        std::vector<int> vote;
        for (char ch : row) vote.push_back(ch - 'a');
        rankings.push_back(std::move(vote));
    }
    return subelect::Election(std::move(labels), std::move(rankings));
}

// Nine-candidate, three-vote profile whose closest 4-clone set {a,b,c,e} is
// not a segment of any vote (swap distance 3).
inline subelect::Election swap_instance() {
    return from_rows({"abcdefghi", "dfgiabche", "abcfeidhg"});
}

}  // namespace fixtures
