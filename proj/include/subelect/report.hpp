#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "subelect/election.hpp"
#include "subelect/signature.hpp"

namespace subelect {

// Witness schemas:
//   {"kind":"clone","candidates":[labels],"voters":[...],"count":k}
//   {"kind":"identity","order":[labels],"voters":[...]}
//   {"kind":"antagonism","order":[labels],"group_a":[...],"group_b":[...]}
inline nlohmann::json witness_to_json(const Election& e, const SubelectionWitness& w,
                                      int clone_count = 0) {
    nlohmann::json out;
    std::vector<std::string> labels;
    for (int c : w.candidates) labels.push_back(e.labels()[static_cast<std::size_t>(c)]);
    switch (w.kind) {
        case WitnessKind::Clone:
            out["kind"] = "clone";
            out["candidates"] = labels;
            out["voters"] = w.voters;
            out["count"] = clone_count;
            break;
        case WitnessKind::Identity:
            out["kind"] = "identity";
            out["order"] = labels;
            out["voters"] = w.voters;
            break;
        case WitnessKind::Antagonism:
            out["kind"] = "antagonism";
            out["order"] = labels;
            out["group_a"] = w.group_a;
            out["group_b"] = w.group_b;
            break;
    }
    return out;
}

inline nlohmann::json signature_to_json(const Signature& sig) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& [m_prime, n_prime] : sig.points)
        points.push_back(nlohmann::json::array({m_prime, n_prime}));
    return points;
}

// One JSON object per CLI invocation.
struct RunReport {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json result = nlohmann::json::object();
    double wall_time_ms = 0.0;
    std::string status = "ok";  // ok | not_found | budget_exceeded

    nlohmann::json to_json() const {
        return {{"command", command},
                {"inputs", inputs},
                {"result", result},
                {"wall_time_ms", wall_time_ms},
                {"status", status}};
    }
};

}  // namespace subelect
