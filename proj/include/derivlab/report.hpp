#ifndef DERIVLAB_REPORT_HPP
#define DERIVLAB_REPORT_HPP

#include <json.hpp>

#include "classifier.hpp"
#include "linear_ode.hpp"
#include "parser.hpp"
#include "resonance.hpp"

namespace derivlab {

// JSON schema "derivlab/1": every CLI report carries the schema tag, the
// command echo, a normalized derivation rendering when one was given, a
// result payload, a citations list and a timing field.

inline nlohmann::json to_json(const BoundedCertificate& c) {
    nlohmann::json j;
    j["target"] = render(c.target);
    j["bounds"] = c.bounds.max_exp;
    j["outcome"] = c.outcome == BoundedCertificate::Outcome::Feasible
                       ? "feasible"
                       : "infeasible-within-bounds";
    if (c.preimage) j["preimage"] = render(*c.preimage);
    j["rows"] = c.rows;
    j["cols"] = c.cols;
    j["elapsed_ms"] = c.elapsed_ms;
    j["witness_check"] = c.witness_check;
    if (c.witness_check) j["contradiction"] = c.contradiction;
    return j;
}

inline nlohmann::json to_json(const Verdict& v) {
    nlohmann::json j;
    j["status"] = to_string(v.status);
    if (!v.rule.empty()) j["rule"] = v.rule;
    if (v.witness) j["witness"] = render(*v.witness);
    j["not_simple"] = v.not_simple;
    if (!v.hypotheses_used.empty()) j["hypotheses_used"] = v.hypotheses_used;
    if (!v.note.empty()) j["note"] = v.note;
    if (v.certificate) j["certificate"] = to_json(*v.certificate);
    return j;
}

inline nlohmann::json to_json(const SimplicityVerdict& v) {
    nlohmann::json j;
    j["simple"] = v.simple;
    if (v.failing_group) j["failing_group"] = *v.failing_group;
    if (v.failing_k) {
        std::vector<std::string> ks;
        for (const auto& k : *v.failing_k) ks.push_back(to_string(k));
        j["failing_k"] = ks;
    }
    j["reason"] = v.reason;
    return j;
}

inline nlohmann::json to_json(const SolvableSubspace& s) {
    nlohmann::json j;
    j["dimension"] = s.dimension;
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& v : s.basis) {
        std::vector<std::string> row;
        for (const auto& q : v) row.push_back(to_string(q));
        basis.push_back(row);
    }
    j["basis"] = basis;
    return j;
}

inline nlohmann::json to_json(const ResonanceSet& r) {
    nlohmann::json j;
    j["arity"] = r.arity;
    j["kernel_dimension"] = r.kernel_dimension;
    j["relations"] = r.relations;
    j["primitive"] = r.primitive;
    return j;
}

inline nlohmann::json make_report(const std::string& command,
                                  nlohmann::json result,
                                  std::vector<std::string> citations,
                                  long long timing_ms) {
    nlohmann::json j;
    j["schema"] = "derivlab/1";
    j["command"] = command;
    j["result"] = std::move(result);
    j["citations"] = std::move(citations);
    j["timing_ms"] = timing_ms;
    return j;
}

} // namespace derivlab

#endif
