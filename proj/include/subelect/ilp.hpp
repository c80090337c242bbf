#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "subelect/election.hpp"
#include "subelect/errors.hpp"

namespace subelect {

enum class IlpSense { Minimize, Maximize };
enum class IlpRelation { LessEq, GreaterEq, Equal };

struct IlpTerm {
    int coeff = 0;
    int var = 0;

    friend bool operator==(const IlpTerm&, const IlpTerm&) = default;
};

struct IlpConstraint {
    std::string name;
    std::vector<IlpTerm> terms;
    IlpRelation relation = IlpRelation::Equal;
    long long rhs = 0;

    friend bool operator==(const IlpConstraint&, const IlpConstraint&) = default;
};

enum class IlpProblemKind { Generic, HiddenIdentity, HiddenAntagonism, MaxIdentity, MaxAntagonism };

// A 0-1 linear program. All variables are binary; products from the problem
// statements appear only in linearized form (z <= x, z <= y, z >= x + y - 1).
// The typed index tables below (voter_vars etc.) exist for witness decoding
// and are not part of the exported LP text.
struct IlpModel {
    IlpSense sense = IlpSense::Minimize;
    std::vector<IlpTerm> objective;
    std::vector<std::string> variable_names;
    std::vector<IlpConstraint> constraints;

    IlpProblemKind kind = IlpProblemKind::Generic;
    int m_prime = 0;
    int n_prime = 0;
    int num_voters = 0;
    int num_candidates = 0;
    std::vector<int> voter_vars;                  // V_i
    std::vector<int> second_group_vars;           // U_i (antagonism)
    std::vector<int> candidate_vars;              // C_j
    std::vector<std::vector<int>> order_vars;     // S_{j1,j2}, -1 on the diagonal

    int add_variable(const std::string& name) {
        variable_names.push_back(name);
        return static_cast<int>(variable_names.size()) - 1;
    }
};

inline bool same_linear_content(const IlpModel& a, const IlpModel& b) {
    return a.sense == b.sense && a.objective == b.objective &&
           a.variable_names == b.variable_names && a.constraints == b.constraints;
}

namespace detail {

struct IlpBuilder {
    IlpModel model;
    int next_constraint = 0;

    void constraint(std::vector<IlpTerm> terms, IlpRelation rel, long long rhs) {
        model.constraints.push_back(
            {"c" + std::to_string(next_constraint++), std::move(terms), rel, rhs});
    }

    // z = x * y for binaries, as three inequalities. z may be a sum expression
    // (used for S_{j1,j2} + S_{j2,j1} = C_{j1} * C_{j2}).
    void product(std::vector<IlpTerm> z, int x, int y) {
        std::vector<IlpTerm> t = z;
        t.push_back({-1, x});
        constraint(t, IlpRelation::LessEq, 0);
        t = z;
        t.push_back({-1, y});
        constraint(t, IlpRelation::LessEq, 0);
        t = std::move(z);
        t.push_back({-1, x});
        t.push_back({-1, y});
        constraint(t, IlpRelation::GreaterEq, -1);
    }
};

// Shared S-variable block: one binary per ordered candidate pair, pair sums
// tied to C_{j1} * C_{j2}, plus transitivity so that active S edges always
// form a total order (needed for the closest-subelection semantics of
// positive optima, not just the zero case).
inline void add_order_variables(IlpBuilder& b, int m) {
    IlpModel& model = b.model;
    model.order_vars.assign(static_cast<std::size_t>(m),
                            std::vector<int>(static_cast<std::size_t>(m), -1));
    for (int j1 = 0; j1 < m; ++j1)
        for (int j2 = 0; j2 < m; ++j2)
            if (j1 != j2)
                model.order_vars[static_cast<std::size_t>(j1)][static_cast<std::size_t>(j2)] =
                    model.add_variable("S_" + std::to_string(j1) + "_" + std::to_string(j2));
    for (int j1 = 0; j1 < m; ++j1)
        for (int j2 = j1 + 1; j2 < m; ++j2)
            b.product({{1, model.order_vars[static_cast<std::size_t>(j1)][static_cast<std::size_t>(j2)]},
                       {1, model.order_vars[static_cast<std::size_t>(j2)][static_cast<std::size_t>(j1)]}},
                      model.candidate_vars[static_cast<std::size_t>(j1)],
                      model.candidate_vars[static_cast<std::size_t>(j2)]);
    for (int a = 0; a < m; ++a)
        for (int bb = 0; bb < m; ++bb)
            for (int c = 0; c < m; ++c) {
                if (a == bb || bb == c || a == c) continue;
                b.constraint({{1, model.order_vars[static_cast<std::size_t>(a)][static_cast<std::size_t>(bb)]},
                              {1, model.order_vars[static_cast<std::size_t>(bb)][static_cast<std::size_t>(c)]},
                              {-1, model.order_vars[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)]}},
                             IlpRelation::LessEq, 1);
            }
}

// Disagreement variables for one voter group. For every voter i and ordered
// pair (j1, j2) that voter i ranks in the opposite way (W = 1), adds a binary
// pinned to group_var_i * S_{source(j1,j2)} and a unit objective term.
// Identity uses S_{j1,j2}; the reversed group uses S_{j2,j1}.
inline std::vector<IlpTerm> add_disagreement_block(IlpBuilder& b, const Election& e,
                                                   const std::vector<int>& group_vars,
                                                   const char* prefix, bool reversed_order) {
    IlpModel& model = b.model;
    const int m = e.num_candidates();
    std::vector<IlpTerm> objective;
    for (int i = 0; i < e.num_voters(); ++i)
        for (int j1 = 0; j1 < m; ++j1)
            for (int j2 = 0; j2 < m; ++j2) {
                if (j1 == j2 || !(e.position(i, j1) > e.position(i, j2))) continue;
                const int var = model.add_variable(std::string(prefix) + "_" + std::to_string(i) +
                                                   "_" + std::to_string(j1) + "_" +
                                                   std::to_string(j2));
                const int order_var =
                    reversed_order
                        ? model.order_vars[static_cast<std::size_t>(j2)][static_cast<std::size_t>(j1)]
                        : model.order_vars[static_cast<std::size_t>(j1)][static_cast<std::size_t>(j2)];
                b.product({{1, var}}, group_vars[static_cast<std::size_t>(i)], order_var);
                objective.push_back({1, var});
            }
    return objective;
}

inline void add_voter_variables(IlpBuilder& b, int n, const char* prefix, std::vector<int>& out) {
    for (int i = 0; i < n; ++i)
        out.push_back(b.model.add_variable(std::string(prefix) + "_" + std::to_string(i)));
}

inline void add_candidate_variables(IlpBuilder& b, int m) {
    for (int j = 0; j < m; ++j)
        b.model.candidate_vars.push_back(b.model.add_variable("C_" + std::to_string(j)));
}

inline std::vector<IlpTerm> unit_terms(const std::vector<int>& vars) {
    std::vector<IlpTerm> t;
    for (int v : vars) t.push_back({1, v});
    return t;
}

}  // namespace detail

// Minimize the number of pairwise disagreements of n' selected voters with a
// common order of m' selected candidates. Optimum 0 iff an identity
// subelection of that exact size exists; otherwise the optimum is the swap
// distance of the closest (m', n') subelection to identity.
inline IlpModel build_hidden_id(const Election& e, int m_prime, int n_prime) {
    const int m = e.num_candidates(), n = e.num_voters();
    if (m_prime < 1 || m_prime > m) throw BadWidth(m_prime, m);
    if (n_prime < 1 || n_prime > n) throw BadVoterCount(n_prime, n);

    detail::IlpBuilder b;
    b.model.sense = IlpSense::Minimize;
    b.model.kind = IlpProblemKind::HiddenIdentity;
    b.model.m_prime = m_prime;
    b.model.n_prime = n_prime;
    b.model.num_voters = n;
    b.model.num_candidates = m;

    detail::add_voter_variables(b, n, "V", b.model.voter_vars);
    detail::add_candidate_variables(b, m);
    b.constraint(detail::unit_terms(b.model.voter_vars), IlpRelation::Equal, n_prime);
    b.constraint(detail::unit_terms(b.model.candidate_vars), IlpRelation::Equal, m_prime);
    detail::add_order_variables(b, m);
    b.model.objective = detail::add_disagreement_block(b, e, b.model.voter_vars, "P", false);
    return b.model;
}

// Antagonism variant: two disjoint groups of n'/2 voters, the second group
// charged against the reversed order.
inline IlpModel build_hidden_an(const Election& e, int m_prime, int n_prime) {
    const int m = e.num_candidates(), n = e.num_voters();
    if (m_prime < 1 || m_prime > m) throw BadWidth(m_prime, m);
    if (n_prime < 1 || n_prime > n) throw BadVoterCount(n_prime, n);
    if (n_prime % 2 != 0) throw OddVoterCount(n_prime);

    detail::IlpBuilder b;
    b.model.sense = IlpSense::Minimize;
    b.model.kind = IlpProblemKind::HiddenAntagonism;
    b.model.m_prime = m_prime;
    b.model.n_prime = n_prime;
    b.model.num_voters = n;
    b.model.num_candidates = m;

    detail::add_voter_variables(b, n, "V", b.model.voter_vars);
    detail::add_voter_variables(b, n, "U", b.model.second_group_vars);
    detail::add_candidate_variables(b, m);
    b.constraint(detail::unit_terms(b.model.voter_vars), IlpRelation::Equal, n_prime / 2);
    b.constraint(detail::unit_terms(b.model.second_group_vars), IlpRelation::Equal, n_prime / 2);
    b.constraint(detail::unit_terms(b.model.candidate_vars), IlpRelation::Equal, m_prime);
    for (int i = 0; i < n; ++i)
        b.constraint({{1, b.model.voter_vars[static_cast<std::size_t>(i)]},
                      {1, b.model.second_group_vars[static_cast<std::size_t>(i)]}},
                     IlpRelation::LessEq, 1);
    detail::add_order_variables(b, m);
    b.model.objective = detail::add_disagreement_block(b, e, b.model.voter_vars, "P", false);
    auto reversed = detail::add_disagreement_block(b, e, b.model.second_group_vars, "R", true);
    b.model.objective.insert(b.model.objective.end(), reversed.begin(), reversed.end());
    return b.model;
}

// Pin the disagreement cost to zero and maximize the number of voters.
inline IlpModel build_max_id(const Election& e, int m_prime) {
    const int m = e.num_candidates(), n = e.num_voters();
    if (m_prime < 1 || m_prime > m) throw BadWidth(m_prime, m);

    detail::IlpBuilder b;
    b.model.sense = IlpSense::Maximize;
    b.model.kind = IlpProblemKind::MaxIdentity;
    b.model.m_prime = m_prime;
    b.model.num_voters = n;
    b.model.num_candidates = m;

    detail::add_voter_variables(b, n, "V", b.model.voter_vars);
    detail::add_candidate_variables(b, m);
    b.constraint(detail::unit_terms(b.model.candidate_vars), IlpRelation::Equal, m_prime);
    detail::add_order_variables(b, m);
    auto cost = detail::add_disagreement_block(b, e, b.model.voter_vars, "P", false);
    b.constraint(cost, IlpRelation::Equal, 0);
    b.model.objective = detail::unit_terms(b.model.voter_vars);
    return b.model;
}

inline IlpModel build_max_an(const Election& e, int m_prime) {
    const int m = e.num_candidates(), n = e.num_voters();
    if (m_prime < 1 || m_prime > m) throw BadWidth(m_prime, m);

    detail::IlpBuilder b;
    b.model.sense = IlpSense::Maximize;
    b.model.kind = IlpProblemKind::MaxAntagonism;
    b.model.m_prime = m_prime;
    b.model.num_voters = n;
    b.model.num_candidates = m;

    detail::add_voter_variables(b, n, "V", b.model.voter_vars);
    detail::add_voter_variables(b, n, "U", b.model.second_group_vars);
    detail::add_candidate_variables(b, m);
    b.constraint(detail::unit_terms(b.model.candidate_vars), IlpRelation::Equal, m_prime);
    std::vector<IlpTerm> balance = detail::unit_terms(b.model.voter_vars);
    for (int u : b.model.second_group_vars) balance.push_back({-1, u});
    b.constraint(std::move(balance), IlpRelation::Equal, 0);
    for (int i = 0; i < n; ++i)
        b.constraint({{1, b.model.voter_vars[static_cast<std::size_t>(i)]},
                      {1, b.model.second_group_vars[static_cast<std::size_t>(i)]}},
                     IlpRelation::LessEq, 1);
    detail::add_order_variables(b, m);
    auto cost = detail::add_disagreement_block(b, e, b.model.voter_vars, "P", false);
    auto reversed = detail::add_disagreement_block(b, e, b.model.second_group_vars, "R", true);
    cost.insert(cost.end(), reversed.begin(), reversed.end());
    b.constraint(cost, IlpRelation::Equal, 0);
    b.model.objective = detail::unit_terms(b.model.voter_vars);
    for (int u : b.model.second_group_vars) b.model.objective.push_back({1, u});
    return b.model;
}

namespace detail {

inline void render_terms(std::ostringstream& out, const std::vector<IlpTerm>& terms,
                         const std::vector<std::string>& names) {
    bool first = true;
    for (const IlpTerm& t : terms) {
        const int mag = std::abs(t.coeff);
        if (first) {
            if (t.coeff < 0) out << "- ";
            first = false;
        } else {
            out << (t.coeff < 0 ? " - " : " + ");
        }
        if (mag != 1) out << mag << ' ';
        out << names[static_cast<std::size_t>(t.var)];
    }
}

}  // namespace detail

// CPLEX LP text: Minimize/Maximize, Subject To, Binary, End. Deterministic:
// variables and constraints appear in declaration order.
inline std::string export_lp(const IlpModel& model) {
    std::ostringstream out;
    out << (model.sense == IlpSense::Minimize ? "Minimize" : "Maximize") << '\n';
    out << " obj:";
    if (!model.objective.empty()) {
        out << ' ';
        detail::render_terms(out, model.objective, model.variable_names);
    }
    out << '\n';
    out << "Subject To\n";
    for (const IlpConstraint& c : model.constraints) {
        out << ' ' << c.name << ": ";
        detail::render_terms(out, c.terms, model.variable_names);
        switch (c.relation) {
            case IlpRelation::LessEq: out << " <= "; break;
            case IlpRelation::GreaterEq: out << " >= "; break;
            case IlpRelation::Equal: out << " = "; break;
        }
        out << c.rhs << '\n';
    }
    out << "Binary\n";
    for (const std::string& name : model.variable_names) out << ' ' << name << '\n';
    out << "End\n";
    return out.str();
}

// Reader for the exact dialect emitted by export_lp. Returns a model whose
// linear content reproduces the exported one (problem metadata is not part of
// the text and stays at defaults).
inline IlpModel parse_lp(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            line = detail::strip(line);
            if (!line.empty()) lines.push_back(line);
        }
    }
    std::size_t pos = 0;
    auto expect_section = [&](const std::string& name) {
        if (pos >= lines.size() || lines[pos] != name)
            throw SubelectError("LP parse: expected section '" + name + "'");
        ++pos;
    };

    IlpModel model;
    if (pos >= lines.size()) throw SubelectError("LP parse: empty file");
    if (lines[pos] == "Minimize")
        model.sense = IlpSense::Minimize;
    else if (lines[pos] == "Maximize")
        model.sense = IlpSense::Maximize;
    else
        throw SubelectError("LP parse: expected Minimize or Maximize");
    ++pos;

    // Collect raw expression lines first; variable names resolve after the
    // Binary section has been read.
    if (pos >= lines.size() || lines[pos].rfind("obj:", 0) != 0)
        throw SubelectError("LP parse: expected objective");
    const std::string obj_text = detail::strip(lines[pos].substr(4));
    ++pos;

    expect_section("Subject To");
    struct RawConstraint {
        std::string name, expr;
        IlpRelation rel;
        long long rhs;
    };
    std::vector<RawConstraint> raw;
    while (pos < lines.size() && lines[pos] != "Binary") {
        const std::string& line = lines[pos];
        const std::size_t colon = line.find(':');
        if (colon == std::string::npos) throw SubelectError("LP parse: unnamed constraint");
        RawConstraint rc;
        rc.name = detail::strip(line.substr(0, colon));
        std::string rest = detail::strip(line.substr(colon + 1));
        std::size_t relpos;
        if ((relpos = rest.find("<=")) != std::string::npos)
            rc.rel = IlpRelation::LessEq;
        else if ((relpos = rest.find(">=")) != std::string::npos)
            rc.rel = IlpRelation::GreaterEq;
        else if ((relpos = rest.find('=')) != std::string::npos)
            rc.rel = IlpRelation::Equal;
        else
            throw SubelectError("LP parse: constraint without relation");
        const std::size_t rel_len = rc.rel == IlpRelation::Equal ? 1 : 2;
        rc.expr = detail::strip(rest.substr(0, relpos));
        rc.rhs = std::stoll(detail::strip(rest.substr(relpos + rel_len)));
        raw.push_back(std::move(rc));
        ++pos;
    }
    expect_section("Binary");
    std::unordered_map<std::string, int> var_index;
    while (pos < lines.size() && lines[pos] != "End") {
        var_index.emplace(lines[pos], model.add_variable(lines[pos]));
        ++pos;
    }
    expect_section("End");

    auto parse_terms = [&](const std::string& expr) {
        std::vector<IlpTerm> terms;
        std::istringstream in(expr);
        std::string token;
        int sign = 1;
        std::optional<int> pending_coeff;
        while (in >> token) {
            if (token == "+") {
                sign = 1;
            } else if (token == "-") {
                sign = -1;
            } else if (!token.empty() &&
                       (std::isdigit(static_cast<unsigned char>(token[0])) != 0)) {
                pending_coeff = std::stoi(token);
            } else {
                auto it = var_index.find(token);
                if (it == var_index.end())
                    throw SubelectError("LP parse: undeclared variable '" + token + "'");
                terms.push_back({sign * pending_coeff.value_or(1), it->second});
                sign = 1;
                pending_coeff.reset();
            }
        }
        return terms;
    };

    model.objective = parse_terms(obj_text);
    for (const RawConstraint& rc : raw)
        model.constraints.push_back({rc.name, parse_terms(rc.expr), rc.rel, rc.rhs});
    return model;
}

enum class IlpStatus { Optimal, Infeasible, BudgetExceededStatus };

struct IlpSolution {
    IlpStatus status = IlpStatus::Infeasible;
    std::vector<int> assignment;
    long long objective_value = 0;
    std::uint64_t nodes = 0;
};

namespace detail {

// Exact depth-first branch and bound over binaries. Bounds propagation keeps
// per-constraint [lo, hi] ranges incrementally; equality-style tightness
// forces the remaining variables of a constraint; the objective bound is the
// additive sum of already-forced terms.
class BranchAndBound {
public:
    BranchAndBound(const IlpModel& model, std::uint64_t node_budget)
        : model_(model), budget_(node_budget) {
        const std::size_t nv = model.variable_names.size();
        value_.assign(nv, -1);
        occurrences_.assign(nv, {});
        lo_.resize(model.constraints.size());
        hi_.resize(model.constraints.size());
        for (std::size_t ci = 0; ci < model.constraints.size(); ++ci) {
            long long lo = 0, hi = 0;
            for (const IlpTerm& t : model.constraints[ci].terms) {
                occurrences_[static_cast<std::size_t>(t.var)].push_back(
                    {static_cast<int>(ci), t.coeff});
                if (t.coeff > 0)
                    hi += t.coeff;
                else
                    lo += t.coeff;
            }
            lo_[ci] = lo;
            hi_[ci] = hi;
        }
        obj_coeff_.assign(nv, 0);
        for (const IlpTerm& t : model.objective) {
            obj_coeff_[static_cast<std::size_t>(t.var)] += t.coeff;
            if (t.coeff > 0)
                obj_hi_ += t.coeff;
            else
                obj_lo_ += t.coeff;
        }
        obj_floor_ = obj_lo_;
        obj_ceiling_ = obj_hi_;
        build_branch_order();
    }

    IlpSolution run() {
        IlpSolution sol;
        best_value_ = model_.sense == IlpSense::Minimize ? std::numeric_limits<long long>::max()
                                                         : std::numeric_limits<long long>::min();
        // Initial propagation catches constraints that are decided up front.
        if (propagate_all()) search(0);
        if (budget_hit_) {
            sol.status = IlpStatus::BudgetExceededStatus;
        } else if (best_assignment_.empty()) {
            sol.status = IlpStatus::Infeasible;
        } else {
            sol.status = IlpStatus::Optimal;
            sol.assignment = best_assignment_;
            sol.objective_value = best_value_;
        }
        sol.nodes = nodes_;
        return sol;
    }

private:
    struct Occurrence {
        int constraint;
        int coeff;
    };

    void build_branch_order() {
        auto add = [&](const std::vector<int>& vars) {
            for (int v : vars) branch_order_.push_back(v);
        };
        add(model_.candidate_vars);
        add(model_.voter_vars);
        add(model_.second_group_vars);
        for (const auto& row : model_.order_vars)
            for (int v : row)
                if (v != -1) branch_order_.push_back(v);
        std::vector<char> seen(model_.variable_names.size(), 0);
        for (int v : branch_order_) seen[static_cast<std::size_t>(v)] = 1;
        for (std::size_t v = 0; v < model_.variable_names.size(); ++v)
            if (!seen[v]) branch_order_.push_back(static_cast<int>(v));
    }

    bool assign(int var, int val) {
        value_[static_cast<std::size_t>(var)] = val;
        trail_.push_back(var);
        const int c = obj_coeff_[static_cast<std::size_t>(var)];
        if (c > 0) {
            if (val == 1) obj_lo_ += c; else obj_hi_ -= c;
        } else if (c < 0) {
            if (val == 1) obj_hi_ += c; else obj_lo_ -= c;
        }
        for (const Occurrence& occ : occurrences_[static_cast<std::size_t>(var)]) {
            const std::size_t ci = static_cast<std::size_t>(occ.constraint);
            if (occ.coeff > 0) {
                if (val == 1) lo_[ci] += occ.coeff; else hi_[ci] -= occ.coeff;
            } else {
                if (val == 1) hi_[ci] += occ.coeff; else lo_[ci] -= occ.coeff;
            }
            if (conflicting(ci)) return false;
            if (forcing(ci)) pending_.push_back(occ.constraint);
        }
        return true;
    }

    bool conflicting(std::size_t ci) const {
        const IlpConstraint& c = model_.constraints[ci];
        switch (c.relation) {
            case IlpRelation::LessEq: return lo_[ci] > c.rhs;
            case IlpRelation::GreaterEq: return hi_[ci] < c.rhs;
            case IlpRelation::Equal: return lo_[ci] > c.rhs || hi_[ci] < c.rhs;
        }
        return false;
    }

    bool forcing(std::size_t ci) const {
        const IlpConstraint& c = model_.constraints[ci];
        if (lo_[ci] == hi_[ci]) return false;  // fully decided
        const bool at_lo = lo_[ci] == c.rhs;
        const bool at_hi = hi_[ci] == c.rhs;
        switch (c.relation) {
            case IlpRelation::LessEq: return at_lo;
            case IlpRelation::GreaterEq: return at_hi;
            case IlpRelation::Equal: return at_lo || at_hi;
        }
        return false;
    }

    // Applies every forced assignment reachable from the pending queue.
    bool drain_pending() {
        while (!pending_.empty()) {
            const std::size_t ci = static_cast<std::size_t>(pending_.back());
            pending_.pop_back();
            const IlpConstraint& c = model_.constraints[ci];
            if (conflicting(ci)) return false;
            if (!forcing(ci)) continue;
            const bool pin_low = lo_[ci] == c.rhs;  // everything must stay at its minimum
            for (const IlpTerm& t : c.terms) {
                if (value_[static_cast<std::size_t>(t.var)] != -1) continue;
                int forced;
                if (pin_low)
                    forced = t.coeff > 0 ? 0 : 1;
                else
                    forced = t.coeff > 0 ? 1 : 0;
                if (!assign(t.var, forced)) return false;
            }
        }
        return true;
    }

    bool propagate_all() {
        for (std::size_t ci = 0; ci < model_.constraints.size(); ++ci) {
            if (conflicting(ci)) return false;
            if (forcing(ci)) pending_.push_back(static_cast<int>(ci));
        }
        return drain_pending();
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            const int var = trail_.back();
            trail_.pop_back();
            const int val = value_[static_cast<std::size_t>(var)];
            value_[static_cast<std::size_t>(var)] = -1;
            const int c = obj_coeff_[static_cast<std::size_t>(var)];
            if (c > 0) {
                if (val == 1) obj_lo_ -= c; else obj_hi_ += c;
            } else if (c < 0) {
                if (val == 1) obj_hi_ -= c; else obj_lo_ += c;
            }
            for (const Occurrence& occ : occurrences_[static_cast<std::size_t>(var)]) {
                const std::size_t ci = static_cast<std::size_t>(occ.constraint);
                if (occ.coeff > 0) {
                    if (val == 1) lo_[ci] -= occ.coeff; else hi_[ci] += occ.coeff;
                } else {
                    if (val == 1) hi_[ci] -= occ.coeff; else lo_[ci] += occ.coeff;
                }
            }
        }
    }

    bool bound_allows_improvement() const {
        if (best_assignment_.empty()) return true;
        if (model_.sense == IlpSense::Minimize) return obj_lo_ < best_value_;
        return obj_hi_ > best_value_;
    }

    bool proven_global_optimum() const {
        if (best_assignment_.empty()) return false;
        if (model_.sense == IlpSense::Minimize) return best_value_ <= obj_floor_;
        return best_value_ >= obj_ceiling_;
    }

    void search(std::size_t depth) {
        if (budget_hit_ || proven_global_optimum()) return;
        if (!bound_allows_improvement()) return;
        // Find the next unassigned branch variable.
        std::size_t k = depth;
        while (k < branch_order_.size() &&
               value_[static_cast<std::size_t>(branch_order_[k])] != -1)
            ++k;
        if (k == branch_order_.size()) {
            leaf();
            return;
        }
        const int var = branch_order_[k];
        for (int val : {1, 0}) {
            if (++nodes_ > budget_) {
                budget_hit_ = true;
                return;
            }
            const std::size_t mark = trail_.size();
            pending_.clear();
            if (assign(var, val) && drain_pending()) search(k + 1);
            undo_to(mark);
            pending_.clear();
            if (budget_hit_ || proven_global_optimum()) return;
            if (!bound_allows_improvement()) return;
        }
    }

    void leaf() {
        // Variables outside the branch order (P/R products) are forced by
        // propagation once their factors are fixed; anything still open is
        // objective-free and can sit at its bound-preferred value.
        long long value = 0;
        for (const IlpTerm& t : model_.objective) {
            const int v = value_[static_cast<std::size_t>(t.var)];
            if (v == -1) return;  // should not happen; treat as non-leaf
            value += t.coeff * v;
        }
        const bool better = best_assignment_.empty() ||
                            (model_.sense == IlpSense::Minimize ? value < best_value_
                                                                : value > best_value_);
        if (better) {
            best_value_ = value;
            best_assignment_.assign(value_.begin(), value_.end());
        }
    }

    const IlpModel& model_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool budget_hit_ = false;

    std::vector<int> value_;
    std::vector<std::vector<Occurrence>> occurrences_;
    std::vector<long long> lo_, hi_;
    std::vector<int> obj_coeff_;
    long long obj_lo_ = 0, obj_hi_ = 0;
    long long obj_floor_ = 0, obj_ceiling_ = 0;
    std::vector<int> branch_order_;
    std::vector<int> trail_;
    std::vector<int> pending_;
    std::vector<int> best_assignment_;
    long long best_value_ = 0;
};

}  // namespace detail

inline IlpSolution solve(const IlpModel& model, std::uint64_t node_budget = 20'000'000) {
    return detail::BranchAndBound(model, node_budget).run();
}

// Reads the witness out of an optimal assignment: candidate order from the
// active S edges (a total order by construction), voters from V/U.
inline SubelectionWitness decode_witness(const IlpModel& model, const IlpSolution& sol) {
    if (sol.status != IlpStatus::Optimal) throw NotOptimal();
    const auto value = [&](int var) {
        return var >= 0 ? sol.assignment[static_cast<std::size_t>(var)] : 0;
    };

    std::vector<int> active;
    for (int j = 0; j < model.num_candidates; ++j)
        if (value(model.candidate_vars[static_cast<std::size_t>(j)]) == 1) active.push_back(j);
    // Sort by wins within the active set; the transitive S edges make the win
    // counts a strict hierarchy.
    std::vector<std::pair<int, int>> keyed;
    for (int j : active) {
        int wins = 0;
        for (int other : active)
            if (other != j &&
                value(model.order_vars[static_cast<std::size_t>(j)][static_cast<std::size_t>(other)]) == 1)
                ++wins;
        keyed.emplace_back(-wins, j);
    }
    std::sort(keyed.begin(), keyed.end());

    SubelectionWitness w;
    for (const auto& [neg_wins, j] : keyed) w.candidates.push_back(j);

    const bool antagonism = model.kind == IlpProblemKind::HiddenAntagonism ||
                            model.kind == IlpProblemKind::MaxAntagonism;
    w.kind = antagonism ? WitnessKind::Antagonism : WitnessKind::Identity;
    for (int i = 0; i < model.num_voters; ++i) {
        if (value(model.voter_vars[static_cast<std::size_t>(i)]) == 1) {
            w.voters.push_back(i);
            if (antagonism) w.group_a.push_back(i);
        }
        if (antagonism && value(model.second_group_vars[static_cast<std::size_t>(i)]) == 1) {
            w.voters.push_back(i);
            w.group_b.push_back(i);
        }
    }
    std::sort(w.voters.begin(), w.voters.end());
    if (antagonism && !w.candidates.empty() && w.candidates.front() > w.candidates.back()) {
        std::reverse(w.candidates.begin(), w.candidates.end());
        std::swap(w.group_a, w.group_b);
    }
    return w;
}

}  // namespace subelect
