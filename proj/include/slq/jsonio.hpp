#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "slq/construct.hpp"
#include "slq/graph6.hpp"
#include "slq/hypergraph.hpp"
#include "slq/reduction.hpp"
#include "slq/spectral.hpp"
#include "slq/subgraph.hpp"
#include "slq/verify.hpp"

namespace slq {

/// All machine-readable output goes through ordered JSON so that identical
/// runs serialize to identical bytes.
using Json = nlohmann::ordered_json;

inline Json to_json(const SpectralResult& r, bool with_vector = true) {
    Json j;
    j["value"] = r.value;
    j["residual"] = r.residual;
    j["iterations"] = r.iterations;
    j["converged"] = r.converged;
    if (with_vector) j["vector"] = r.eigenvector;
    return j;
}

inline Json to_json(const HyperSpectralResult& r, bool with_vector = true) {
    Json j;
    j["value"] = r.value;
    j["residual"] = r.residual;
    j["iterations"] = r.iterations;
    j["converged"] = r.converged;
    j["monotone"] = r.monotone;
    if (with_vector) j["vector"] = r.x;
    return j;
}

inline Json to_json(const Witness& w) {
    Json j;
    j["kind"] = w.kind;
    j["classes"] = w.classes;
    if (w.edge) j["edge"] = {w.edge->first, w.edge->second};
    return j;
}

inline Json to_json(const ReductionParams& p) {
    Json j;
    j["gamma"] = p.gamma.str();
    j["alpha"] = p.alpha.str();
    j["beta"] = p.beta.str();
    j["s"] = p.slack.str();
    j["tol"] = p.tol;
    return j;
}

template <std::size_t W>
Json to_json(const BasicReductionTrace<W>& t) {
    Json j;
    j["schema"] = "reduction-trace/1";
    j["algorithm"] = t.algorithm;
    j["params"] = to_json(t.params);
    Json steps = Json::array();
    for (const auto& s : t.steps) {
        Json e;
        e["vertex"] = s.vertex;
        e["min_coordinate"] = s.min_coordinate;
        e["q"] = s.q;
        e["delta"] = s.delta;
        e["order"] = s.order;
        steps.push_back(std::move(e));
    }
    j["steps"] = std::move(steps);
    j["outcome"] = to_string(t.outcome);
    j["final_graph6"] = write_graph6(t.final_graph);
    j["final_order"] = t.final_graph.order();
    j["final_q"] = t.final_q;
    j["final_delta"] = t.final_delta;
    j["solver_failed"] = t.solver_failed;
    Json c;
    c["q_growth"] = t.certified.q_growth;
    c["min_degree"] = t.certified.min_degree;
    c["size"] = t.certified.size;
    if (t.algorithm == 2) c["case_i"] = t.certified.case_i;
    j["certified"] = std::move(c);
    return j;
}

inline Json to_json(const ConstructionReport& r) {
    Json j;
    j["schema"] = "construction-report/1";
    j["graph6"] = write_graph6(r.graph);
    j["seed"] = r.seed;
    j["stream"] = r.stream;
    j["attempts"] = r.attempts;
    j["edge_count"] = r.edge_count;
    j["t"] = r.t;
    j["deletions"] = r.deletions;
    j["q_bound_check"] = {{"four_e_over_n", r.q_bound_check.four_e_over_n},
                          {"target", r.q_bound_check.target},
                          {"pass", r.q_bound_check.pass}};
    j["freeness_check"] = {{"pattern", r.freeness_check.pattern}, {"pass", r.freeness_check.pass}};
    if (r.gprime_check)
        j["gprime_check"] = {{"edges", r.gprime_check->first}, {"target", r.gprime_check->second}};
    j["q_value"] = r.q_value;
    j["pass"] = r.pass;
    return j;
}

inline Json to_json(const SuiteParams& p) {
    Json j;
    j["k"] = p.k;
    j["tol"] = p.tol;
    j["eig_tol"] = p.eig_tol;
    j["seed"] = p.seed;
    j["jobs"] = p.jobs;
    j["samples"] = p.samples;
    return j;
}

inline Json to_json(const VerificationReport& r) {
    Json j;
    j["schema"] = "verification-report/1";
    j["suite"] = r.suite;
    j["instance_format"] = r.instance_format;
    j["n_max"] = r.n_max;
    j["parameters"] = to_json(r.params);
    j["instances"] = r.instances;
    Json fails = Json::array();
    for (const auto& f : r.failures) fails.push_back({{"instance", f.instance}, {"details", f.details}});
    j["failures"] = std::move(fails);
    if (r.has_extremal) j["extremal"] = {{"instance", r.extremal_instance}, {"slack", r.extremal_slack}};
    for (const auto& [key, value] : r.statistics) j["statistics"][key] = value;
    j["runtime_seconds"] = r.runtime_seconds;
    return j;
}

/// Lossy one-line CSV projection of a suite report.
inline std::string to_csv(const VerificationReport& r) {
    std::ostringstream os;
    os << "suite,n_max,k,instances,failures,min_slack,runtime_seconds\n";
    os << r.suite << ',' << r.n_max << ',' << r.params.k << ',' << r.instances << ',' << r.failures.size() << ',';
    if (r.has_extremal) os << r.extremal_slack;
    os << ',' << r.runtime_seconds << '\n';
    return os.str();
}

inline Json to_json(const LemmaCheck& c) {
    return Json{{"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds}};
}

inline Json to_json(const ShadowBound& b) {
    Json j;
    j["lhs"] = b.lhs;
    j["rhs"] = b.rhs;
    j["holds"] = b.holds;
    j["hyper_converged"] = b.hyper_converged;
    j["graph_converged"] = b.graph_converged;
    return j;
}

inline Json to_json(const StabilityProbe& p) {
    Json j;
    j["q_value"] = p.q_value;
    j["q_threshold"] = p.q_threshold;
    j["free"] = p.free;
    j["hypothesis"] = p.hypothesis;
    j["edit_distance"] = p.edit_distance;
    j["eps_n2"] = p.eps_n2;
    j["conclusion"] = p.conclusion;
    j["consistent"] = p.consistent;
    return j;
}

} // namespace slq
