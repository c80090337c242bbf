#pragma once

#include <stdexcept>
#include <string>

namespace subelect {

// Base class for everything thrown by this library.
struct SubelectError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedHeader final : SubelectError {
    explicit MalformedHeader(const std::string& detail)
        : SubelectError("malformed profile: " + detail) {}
};

struct NotAPermutation final : SubelectError {
    int voter;
    explicit NotAPermutation(int voter_index)
        : SubelectError("vote " + std::to_string(voter_index) +
                        " is not a permutation of the candidate set"),
          voter(voter_index) {}
};

struct UnknownCandidate final : SubelectError {
    std::string label;
    explicit UnknownCandidate(std::string candidate_label)
        : SubelectError("unknown candidate label '" + candidate_label + "'"),
          label(std::move(candidate_label)) {}
};

struct EmptySelection final : SubelectError {
    EmptySelection() : SubelectError("candidate/voter selection must be nonempty") {}
};

struct BadWidth final : SubelectError {
    BadWidth(int width, int num_candidates)
        : SubelectError("candidate count " + std::to_string(width) +
                        " outside [1, " + std::to_string(num_candidates) + "]") {}
};

struct BadVoterCount final : SubelectError {
    BadVoterCount(int count, int num_voters)
        : SubelectError("voter count " + std::to_string(count) +
                        " outside [1, " + std::to_string(num_voters) + "]") {}
};

struct OddVoterCount final : SubelectError {
    explicit OddVoterCount(int count)
        : SubelectError("voter count " + std::to_string(count) +
                        " must be even for antagonism") {}
};

struct BudgetExceeded final : SubelectError {
    explicit BudgetExceeded(const std::string& detail)
        : SubelectError("search budget exceeded: " + detail) {}
};

struct NotOptimal final : SubelectError {
    NotOptimal() : SubelectError("solution is not optimal; cannot decode a witness") {}
};

struct InvalidSpec final : SubelectError {
    explicit InvalidSpec(const std::string& detail)
        : SubelectError("invalid culture spec: " + detail) {}
};

}  // namespace subelect
