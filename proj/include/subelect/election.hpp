#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "subelect/errors.hpp"

namespace subelect {

// An ordinal election: n voters, each submitting a complete strict ranking of
// m labeled candidates. Kept in both forms: rankings[i][p] is the candidate at
// position p of voter i (best first), positions[i][c] is candidate c's
// position in voter i's ranking. Immutable after construction.
class Election {
public:
    Election(std::vector<std::string> labels, std::vector<std::vector<int>> rankings)
        : labels_(std::move(labels)), rankings_(std::move(rankings)) {
        const int m = static_cast<int>(labels_.size());
        const int n = static_cast<int>(rankings_.size());
        if (m < 1) throw MalformedHeader("need at least one candidate");
        if (n < 1) throw MalformedHeader("need at least one voter");
        positions_.assign(static_cast<std::size_t>(n),
                          std::vector<int>(static_cast<std::size_t>(m), -1));
        for (int i = 0; i < n; ++i) {
            const auto& row = rankings_[static_cast<std::size_t>(i)];
            if (static_cast<int>(row.size()) != m) throw NotAPermutation(i);
            for (int p = 0; p < m; ++p) {
                const int c = row[static_cast<std::size_t>(p)];
                if (c < 0 || c >= m) throw NotAPermutation(i);
                if (positions_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != -1)
                    throw NotAPermutation(i);
                positions_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = p;
            }
        }
    }

    int num_candidates() const { return static_cast<int>(labels_.size()); }
    int num_voters() const { return static_cast<int>(rankings_.size()); }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::vector<int>>& rankings() const { return rankings_; }
    const std::vector<std::vector<int>>& positions() const { return positions_; }

    const std::vector<int>& ranking(int voter) const {
        return rankings_[static_cast<std::size_t>(voter)];
    }
    int position(int voter, int candidate) const {
        return positions_[static_cast<std::size_t>(voter)][static_cast<std::size_t>(candidate)];
    }
    bool prefers(int voter, int first, int second) const {
        return position(voter, first) < position(voter, second);
    }

    int candidate_index(const std::string& label) const {
        for (int c = 0; c < num_candidates(); ++c)
            if (labels_[static_cast<std::size_t>(c)] == label) return c;
        throw UnknownCandidate(label);
    }

    friend bool operator==(const Election& a, const Election& b) {
        return a.labels_ == b.labels_ && a.rankings_ == b.rankings_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> rankings_;
    std::vector<std::vector<int>> positions_;
};

namespace detail {

inline std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.push_back(line);
    }
    return out;
}

}  // namespace detail

// Profile file format: line 1 "m n"; m candidate label lines (no whitespace);
// n vote lines, labels separated by '>' with optional spaces, best first.
// Lines beginning with '#' are ignored.
inline Election parse_election(const std::string& text) {
    const std::vector<std::string> lines = detail::content_lines(text);
    if (lines.empty()) throw MalformedHeader("empty profile");

    std::istringstream header(lines[0]);
    long long m = 0, n = 0;
    std::string extra;
    if (!(header >> m >> n) || (header >> extra) || m < 1 || n < 1)
        throw MalformedHeader("expected \"m n\" on the first line");
    if (static_cast<long long>(lines.size()) != 1 + m + n)
        throw MalformedHeader("expected " + std::to_string(1 + m + n) + " content lines, got " +
                              std::to_string(lines.size()));

    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index_of;
    for (long long j = 0; j < m; ++j) {
        std::string label = detail::strip(lines[static_cast<std::size_t>(1 + j)]);
        if (label.empty() || label.find_first_of(" \t>") != std::string::npos)
            throw MalformedHeader("bad candidate label '" + label + "'");
        if (!index_of.emplace(label, static_cast<int>(j)).second)
            throw MalformedHeader("duplicate candidate label '" + label + "'");
        labels.push_back(std::move(label));
    }

    std::vector<std::vector<int>> rankings;
    for (long long i = 0; i < n; ++i) {
        const std::string& line = lines[static_cast<std::size_t>(1 + m + i)];
        std::vector<int> row;
        std::size_t start = 0;
        while (start <= line.size()) {
            std::size_t sep = line.find('>', start);
            std::string token = detail::strip(
                line.substr(start, sep == std::string::npos ? std::string::npos : sep - start));
            if (token.empty()) throw NotAPermutation(static_cast<int>(i));
            auto it = index_of.find(token);
            if (it == index_of.end()) throw UnknownCandidate(token);
            row.push_back(it->second);
            if (sep == std::string::npos) break;
            start = sep + 1;
        }
        if (static_cast<long long>(row.size()) != m) throw NotAPermutation(static_cast<int>(i));
        rankings.push_back(std::move(row));
    }
    return Election(std::move(labels), std::move(rankings));
}

inline std::string format_election(const Election& e) {
    std::ostringstream out;
    out << e.num_candidates() << ' ' << e.num_voters() << '\n';
    for (const auto& label : e.labels()) out << label << '\n';
    for (const auto& row : e.rankings()) {
        for (std::size_t p = 0; p < row.size(); ++p) {
            if (p > 0) out << " > ";
            out << e.labels()[static_cast<std::size_t>(row[p])];
        }
        out << '\n';
    }
    return out.str();
}

// PrefLib SOC reader: each content line is "count: i1,i2,...,im" with 1-based
// candidate ids, expanded `count` times. '#' lines are ignored; labels are
// synthesized as c1..cm.
inline Election parse_preflib_soc(const std::string& text) {
    const std::vector<std::string> lines = detail::content_lines(text);
    if (lines.empty()) throw MalformedHeader("empty SOC file");

    std::vector<std::vector<int>> rankings;
    int m = -1;
    for (const std::string& line : lines) {
        std::size_t colon = line.find(':');
        if (colon == std::string::npos) throw MalformedHeader("expected \"count: ranking\" line");
        long long count = 0;
        try {
            count = std::stoll(detail::strip(line.substr(0, colon)));
        } catch (const std::exception&) {
            throw MalformedHeader("bad vote count in '" + line + "'");
        }
        if (count < 1) throw MalformedHeader("vote count must be positive");

        std::vector<int> row;
        std::istringstream items(line.substr(colon + 1));
        std::string token;
        while (std::getline(items, token, ',')) {
            token = detail::strip(token);
            if (token.empty()) throw MalformedHeader("empty candidate id");
            try {
                row.push_back(std::stoi(token) - 1);
            } catch (const std::exception&) {
                throw UnknownCandidate(token);
            }
        }
        if (m == -1) m = static_cast<int>(row.size());
        const int voter = static_cast<int>(rankings.size());
        if (static_cast<int>(row.size()) != m) throw NotAPermutation(voter);
        for (long long k = 0; k < count; ++k) rankings.push_back(row);
    }

    std::vector<std::string> labels;
    for (int c = 0; c < m; ++c) labels.push_back("c" + std::to_string(c + 1));
    return Election(std::move(labels), std::move(rankings));
}

// Restriction of e to the given candidate and voter subsets, preserving each
// kept voter's relative order of kept candidates. Candidate indices are
// renumbered 0..|candidates|-1 in ascending original-index order.
inline Election restrict_election(const Election& e, const std::vector<int>& candidates,
                                  const std::vector<int>& voters) {
    if (candidates.empty() || voters.empty()) throw EmptySelection();
    std::vector<int> cands = candidates;
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    std::vector<int> vs = voters;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());

    std::vector<int> keep(static_cast<std::size_t>(e.num_candidates()), -1);
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < cands.size(); ++k) {
        keep.at(static_cast<std::size_t>(cands[k])) = static_cast<int>(k);
        labels.push_back(e.labels()[static_cast<std::size_t>(cands[k])]);
    }
    std::vector<std::vector<int>> rankings;
    for (int v : vs) {
        std::vector<int> row;
        for (int c : e.ranking(v))
            if (keep[static_cast<std::size_t>(c)] != -1)
                row.push_back(keep[static_cast<std::size_t>(c)]);
        rankings.push_back(std::move(row));
    }
    return Election(std::move(labels), std::move(rankings));
}

inline bool is_identity(const Election& e) {
    for (int i = 1; i < e.num_voters(); ++i)
        if (e.ranking(i) != e.ranking(0)) return false;
    return true;
}

// Balanced partition (group_a, group_b) with group_a's rows identical and
// group_b's rows their exact reverse; absent if none exists or n is odd.
// group_a is the side whose shared ranking is lexicographically smaller.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> is_antagonism(
    const Election& e) {
    const int n = e.num_voters();
    if (n % 2 != 0) return std::nullopt;
    if (e.num_candidates() == 1) {
        std::vector<int> a, b;
        for (int i = 0; i < n; ++i) (i < n / 2 ? a : b).push_back(i);
        return std::make_pair(std::move(a), std::move(b));
    }
    const std::vector<int>& forward = e.ranking(0);
    std::vector<int> reversed(forward.rbegin(), forward.rend());
    std::vector<int> a, b;
    for (int i = 0; i < n; ++i) {
        if (e.ranking(i) == forward)
            a.push_back(i);
        else if (e.ranking(i) == reversed)
            b.push_back(i);
        else
            return std::nullopt;
    }
    if (a.size() != b.size()) return std::nullopt;
    if (reversed < forward) std::swap(a, b);
    return std::make_pair(std::move(a), std::move(b));
}

enum class WitnessKind { Identity, Antagonism, Clone };

// A candidate subset plus voter subset certifying a property. `candidates` is
// an ordered chain for identity/antagonism and an ascending set for clones;
// group_a/group_b are used by antagonism only (group_a ranks `candidates` in
// the given order, group_b in the exact reverse).
struct SubelectionWitness {
    WitnessKind kind = WitnessKind::Identity;
    std::vector<int> candidates;
    std::vector<int> voters;
    std::vector<int> group_a;
    std::vector<int> group_b;
};

// Checks a witness against the definitions. `require_balanced` is relaxed by
// the sum/product antagonism variants, whose groups may differ in size.
inline bool witness_valid(const Election& e, const SubelectionWitness& w,
                          bool require_balanced = true) {
    if (w.candidates.empty() || w.voters.empty()) return false;
    for (int c : w.candidates)
        if (c < 0 || c >= e.num_candidates()) return false;
    for (int v : w.voters)
        if (v < 0 || v >= e.num_voters()) return false;

    switch (w.kind) {
        case WitnessKind::Identity: {
            for (int v : w.voters)
                for (std::size_t k = 1; k < w.candidates.size(); ++k)
                    if (!e.prefers(v, w.candidates[k - 1], w.candidates[k])) return false;
            return true;
        }
        case WitnessKind::Antagonism: {
            std::vector<int> all = w.group_a;
            all.insert(all.end(), w.group_b.begin(), w.group_b.end());
            std::sort(all.begin(), all.end());
            std::vector<int> vs = w.voters;
            std::sort(vs.begin(), vs.end());
            if (all != vs) return false;
            if (require_balanced && w.group_a.size() != w.group_b.size()) return false;
            for (int v : w.group_a)
                for (std::size_t k = 1; k < w.candidates.size(); ++k)
                    if (!e.prefers(v, w.candidates[k - 1], w.candidates[k])) return false;
            for (int v : w.group_b)
                for (std::size_t k = 1; k < w.candidates.size(); ++k)
                    if (!e.prefers(v, w.candidates[k], w.candidates[k - 1])) return false;
            return true;
        }
        case WitnessKind::Clone: {
            for (int v : w.voters) {
                int lo = e.num_candidates(), hi = -1;
                for (int c : w.candidates) {
                    lo = std::min(lo, e.position(v, c));
                    hi = std::max(hi, e.position(v, c));
                }
                if (hi - lo + 1 != static_cast<int>(w.candidates.size())) return false;
            }
            return true;
        }
    }
    return false;
}

}  // namespace subelect
