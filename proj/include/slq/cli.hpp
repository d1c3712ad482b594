#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slq/jsonio.hpp"
#include "slq/slq.hpp"

namespace slq::cli {

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline void emit(const std::string& text, const std::string& output) {
    if (output.empty() || output == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + output);
    out << text;
}

struct GraphInput {
    std::string graph6;
    std::string edges_file;
    std::string family;

    void attach(CLI::App* cmd) {
        auto* a = cmd->add_option("--graph6", graph6, "graph6 string");
        auto* b = cmd->add_option("--edges", edges_file, "edge-list file (\"n m\" header, 0-based pairs)");
        auto* c = cmd->add_option("--family", family, "named family, e.g. turan(7,3), kkplus(2,2), split(5,1)");
        a->excludes(b)->excludes(c);
        b->excludes(c);
    }

    Graph load() const {
        if (!graph6.empty()) return read_graph6<1>(graph6);
        if (!edges_file.empty()) return read_edge_list<1>(read_file(edges_file));
        if (!family.empty()) return named_family<1>(family);
        throw CLI::ValidationError("provide a graph via --graph6, --edges or --family");
    }

    Json config() const {
        Json j;
        if (!graph6.empty()) j["graph6"] = graph6;
        if (!edges_file.empty()) j["edges"] = edges_file;
        if (!family.empty()) j["family"] = family;
        return j;
    }
};

inline std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

} // namespace detail

/// Entry point behind the binary: 0 = success/pass, 1 = suite failure
/// findings or failed certification, 2 = usage error.
inline int dispatch(int argc, const char* const* argv) {
    CLI::App app{"signless Laplacian spectral extremal toolkit"};
    app.require_subcommand(1);

    std::string output;
    std::string format = "json";
    double tol = 1e-10;
    std::uint64_t seed = 1;
    app.add_option("--output", output, "output path (default stdout)")->capture_default_str();
    app.add_option("--format", format, "json|csv|graph6")->capture_default_str();
    app.add_option("--tol", tol, "eigensolver tolerance")->capture_default_str();
    app.add_option("--seed", seed, "master RNG seed (env SEL_SEED overrides)")->capture_default_str();

    // spectral
    auto* spectral_cmd = app.add_subcommand("spectral", "spectral radius of Q or A, bounds, quotient values");
    detail::GraphInput spectral_in;
    spectral_in.attach(spectral_cmd);
    std::string matrix = "q";
    bool with_vector = false;
    bool with_bounds = false;
    std::string multipartite;
    spectral_cmd->add_option("--matrix", matrix, "q|lambda|both")->capture_default_str();
    spectral_cmd->add_flag("--vector", with_vector, "include the eigenvector");
    spectral_cmd->add_flag("--bounds", with_bounds, "include the q lower bounds");
    spectral_cmd->add_option("--multipartite", multipartite,
                             "part sizes, e.g. 3,2,2: exact quotient value instead of a graph solve");

    // reduce
    auto* reduce_cmd = app.add_subcommand("reduce", "Perron-vector reduction trace");
    detail::GraphInput reduce_in;
    reduce_in.attach(reduce_cmd);
    int algorithm = 1;
    std::string gamma_s, alpha_s, beta_s, slack_s = "0";
    reduce_cmd->add_option("--alg", algorithm, "1|2")->capture_default_str();
    reduce_cmd->add_option("--gamma", gamma_s, "density parameter, exact rational p/q")->required();
    reduce_cmd->add_option("--alpha", alpha_s, "degree gap, exact rational p/q")->required();
    reduce_cmd->add_option("--beta", beta_s, "fraction, exact rational p/q")->required();
    reduce_cmd->add_option("--s", slack_s, "slack s >= 0")->capture_default_str();

    // find
    auto* find_cmd = app.add_subcommand("find", "substructure finders and counters");
    detail::GraphInput find_in;
    find_in.attach(find_cmd);
    std::string what;
    int arg_r = 3, arg_k = 2, arg_parts = 2, arg_t = 1;
    find_cmd->add_option("--what", what, "cliques|maxclique|blowup|kkplus|joint|book|chromatic|ktt")->required();
    find_cmd->add_option("--r", arg_r, "clique order (cliques/joint)")->capture_default_str();
    find_cmd->add_option("--k", arg_k, "k (kkplus/book)")->capture_default_str();
    find_cmd->add_option("--parts", arg_parts, "number of blowup classes")->capture_default_str();
    find_cmd->add_option("--t", arg_t, "t (ktt)")->capture_default_str();

    // distance
    auto* dist_cmd = app.add_subcommand("distance", "edit distance to the Turan graph");
    detail::GraphInput dist_in;
    dist_in.attach(dist_cmd);
    int dist_k = 2;
    dist_cmd->add_option("--k", dist_k, "number of parts")->capture_default_str();

    // construct
    auto* cons_cmd = app.add_subcommand("construct", "randomized extremal constructions with certification");
    std::string example = "2.4";
    int cons_n = 0, cons_k = 2, attempts = 64;
    std::string eps_s = "1/32";
    cons_cmd->add_option("--example", example, "2.4|2.6")->capture_default_str();
    cons_cmd->add_option("--n", cons_n, "order (k must divide n)")->required();
    cons_cmd->add_option("--k", cons_k, "k")->capture_default_str();
    cons_cmd->add_option("--eps", eps_s, "epsilon as exact rational (example 2.4)")->capture_default_str();
    cons_cmd->add_option("--attempts", attempts, "attempt cap")->capture_default_str();

    // hyper
    auto* hyper_cmd = app.add_subcommand("hyper", "linear hypergraph operations");
    detail::GraphInput hyper_pattern;
    hyper_pattern.attach(hyper_cmd);
    std::string op = "q";
    std::string hfile;
    int hyper_m = 3, hyper_r = 3, hyper_s = 2, restarts = 8;
    hyper_cmd->add_option("--op", op, "q|shadow|shadow-bound|design|expansion|contains")->capture_default_str();
    hyper_cmd->add_option("--file", hfile, "hypergraph text file (\"n r m\" header)");
    hyper_cmd->add_option("--m", hyper_m, "design group size (prime)")->capture_default_str();
    hyper_cmd->add_option("--r", hyper_r, "uniformity")->capture_default_str();
    hyper_cmd->add_option("--shadow-s", hyper_s, "shadow arity")->capture_default_str();
    hyper_cmd->add_option("--restarts", restarts, "q_hyper restarts")->capture_default_str();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "exhaustive and sampled theorem suites");
    std::string suite;
    int nmax = 6, vk = 2, jobs = 1, samples = 100;
    std::string sigma_s = "1/10", veps_s = "1/100";
    verify_cmd->add_option("--suite", suite, "suite name, 'all', 'conjecture-9.2' or 'stability'")->required();
    verify_cmd->add_option("--nmax", nmax, "maximum order")->capture_default_str();
    verify_cmd->add_option("--k", vk, "k parameter")->capture_default_str();
    verify_cmd->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    verify_cmd->add_option("--samples", samples, "sample count for sampled suites")->capture_default_str();
    verify_cmd->add_option("--sigma", sigma_s, "stability sigma, exact rational")->capture_default_str();
    verify_cmd->add_option("--eps", veps_s, "stability epsilon, exact rational")->capture_default_str();
    detail::GraphInput verify_in; // stability probe target
    verify_in.attach(verify_cmd);
    int forbid_clique = 5;
    verify_cmd->add_option("--forbid-clique", forbid_clique, "stability probe: forbid K_s")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (const char* env = std::getenv("SEL_SEED")) seed = std::strtoull(env, nullptr, 10);

    Json out;
    out["config"] = {{"tol", tol}, {"seed", seed}, {"format", format}};
    int exit_code = 0;

    try {
        if (*spectral_cmd) {
            out["config"]["subcommand"] = "spectral";
            if (!multipartite.empty()) {
                auto sizes = detail::parse_int_list(multipartite);
                out["config"]["multipartite"] = multipartite;
                out["result"] = {{"value", q_multipartite_exact(sizes)}};
            } else {
                Graph g = spectral_in.load();
                out["config"].update(spectral_in.config());
                out["config"]["matrix"] = matrix;
                Json res;
                res["n"] = g.order();
                res["m"] = g.edge_count();
                if (matrix == "q" || matrix == "both") res["q"] = to_json(q_radius(g, tol), with_vector);
                if (matrix == "lambda" || matrix == "both") res["lambda"] = to_json(lambda_radius(g, tol), with_vector);
                if (matrix != "q" && matrix != "lambda" && matrix != "both")
                    throw CLI::ValidationError("--matrix must be q, lambda or both");
                if (with_bounds) {
                    auto b = q_lower_bounds(g, tol);
                    Json jb;
                    jb["four_e_over_n"] = b.four_e_over_n;
                    if (b.degree_power_over_m) jb["degree_power_over_m"] = *b.degree_power_over_m;
                    jb["twice_lambda"] = b.twice_lambda;
                    res["q_lower_bounds"] = std::move(jb);
                }
                out["result"] = std::move(res);
            }
            detail::emit(out.dump(2), output);
        } else if (*reduce_cmd) {
            Graph g = reduce_in.load();
            ReductionParams p{parse_rational(gamma_s), parse_rational(alpha_s), parse_rational(beta_s),
                              parse_rational(slack_s), tol};
            auto trace = algorithm == 1 ? reduce_algorithm1(g, p) : reduce_algorithm2(g, p);
            out["config"]["subcommand"] = "reduce";
            out["config"].update(reduce_in.config());
            out["config"]["alg"] = algorithm;
            out["result"] = to_json(trace);
            detail::emit(out.dump(2), output);
            if (trace.solver_failed) exit_code = 1;
        } else if (*find_cmd) {
            Graph g = find_in.load();
            out["config"]["subcommand"] = "find";
            out["config"].update(find_in.config());
            out["config"]["what"] = what;
            Json res;
            if (what == "cliques") {
                res["r"] = arg_r;
                res["count"] = count_cliques(g, arg_r);
            } else if (what == "maxclique") {
                res["size"] = max_clique(g);
            } else if (what == "blowup") {
                auto [t, w] = max_blowup(g, arg_parts);
                res["parts"] = arg_parts;
                res["t"] = t;
                if (t > 0) res["witness"] = to_json(w);
            } else if (what == "kkplus") {
                auto [t, w] = max_kk_plus(g, arg_k);
                res["k"] = arg_k;
                res["t"] = t;
                if (t > 0) res["witness"] = to_json(w);
            } else if (what == "joint") {
                auto j = joint_size(g, arg_r);
                res["r"] = arg_r;
                res["size"] = j.size;
                if (j.edge) res["edge"] = {j.edge->first, j.edge->second};
            } else if (what == "book") {
                auto [t, w] = generalized_book_size(g, arg_k);
                res["k"] = arg_k;
                res["t"] = t;
                res["witness"] = to_json(w);
            } else if (what == "chromatic") {
                res["chi"] = chromatic_number(g);
            } else if (what == "ktt") {
                auto w = find_ktt(g, arg_t);
                res["t"] = arg_t;
                res["found"] = w.has_value();
                if (w) res["witness"] = to_json(*w);
            } else {
                throw CLI::ValidationError("unknown --what " + what);
            }
            out["result"] = std::move(res);
            detail::emit(out.dump(2), output);
        } else if (*dist_cmd) {
            Graph g = dist_in.load();
            out["config"]["subcommand"] = "distance";
            out["config"].update(dist_in.config());
            out["config"]["k"] = dist_k;
            out["result"] = {{"edit_distance", edit_distance_to_turan(g, dist_k)}};
            detail::emit(out.dump(2), output);
        } else if (*cons_cmd) {
            out["config"]["subcommand"] = "construct";
            out["config"]["example"] = example;
            out["config"]["n"] = cons_n;
            out["config"]["k"] = cons_k;
            out["config"]["attempts"] = attempts;
            ConstructionReport rep;
            if (example == "2.4") {
                out["config"]["eps"] = eps_s;
                rep = example_2_4(cons_n, cons_k, parse_rational(eps_s), seed, attempts);
            } else if (example == "2.6") {
                rep = example_2_6(cons_n, cons_k, seed, attempts);
            } else {
                throw CLI::ValidationError("--example must be 2.4 or 2.6");
            }
            if (format == "graph6") {
                detail::emit(write_graph6(rep.graph), output);
            } else {
                out["result"] = to_json(rep);
                detail::emit(out.dump(2), output);
            }
            if (!rep.pass) exit_code = 1;
        } else if (*hyper_cmd) {
            out["config"]["subcommand"] = "hyper";
            out["config"]["op"] = op;
            auto load_hyper = [&]() {
                if (hfile.empty()) throw CLI::ValidationError("--file required for this --op");
                return LinearHypergraph(read_hypergraph(detail::read_file(hfile)));
            };
            if (op == "q") {
                auto h = load_hyper();
                out["result"] = to_json(q_hyper(h, tol, restarts, seed), with_vector);
                detail::emit(out.dump(2), output);
            } else if (op == "shadow") {
                auto h = load_hyper();
                detail::emit(write_hypergraph(shadow(h, hyper_s)), output);
            } else if (op == "shadow-bound") {
                auto h = load_hyper();
                out["result"] = to_json(check_shadow_bound(h));
                detail::emit(out.dump(2), output);
            } else if (op == "design") {
                detail::emit(write_hypergraph(transversal_design(hyper_m, hyper_r)), output);
            } else if (op == "expansion") {
                Graph f = hyper_pattern.load();
                detail::emit(write_hypergraph(expansion(f, hyper_r)), output);
            } else if (op == "contains") {
                auto h = load_hyper();
                Graph f = hyper_pattern.load();
                auto w = contains_expansion(h, f, h.uniformity());
                Json res;
                res["found"] = w.has_value();
                if (w) res["witness"] = to_json(*w);
                out["result"] = std::move(res);
                detail::emit(out.dump(2), output);
            } else {
                throw CLI::ValidationError("unknown --op " + op);
            }
        } else if (*verify_cmd) {
            out["config"]["subcommand"] = "verify";
            SuiteParams params;
            params.k = vk;
            params.eig_tol = tol;
            params.seed = seed;
            params.jobs = jobs;
            params.samples = samples;
            if (suite == "stability") {
                Graph g = verify_in.load();
                out["config"].update(verify_in.config());
                out["config"]["sigma"] = sigma_s;
                out["config"]["eps"] = veps_s;
                out["config"]["forbid_clique"] = forbid_clique;
                auto probe = stability_probe(
                    g, vk, parse_rational(sigma_s), parse_rational(veps_s),
                    [&](const Graph& gg) { return count_cliques(gg, forbid_clique) == 0; }, tol);
                out["result"] = to_json(probe);
                detail::emit(out.dump(2), output);
                if (!probe.consistent) exit_code = 1;
            } else {
                std::vector<VerificationReport> reports;
                if (suite == "all") {
                    for (const auto& name : suite_names()) {
                        if (name == "q-turan" || name == "counting" || name == "degree-power") {
                            for (int kk : {2, 3}) {
                                auto p = params;
                                p.k = kk;
                                reports.push_back(run_suite(name, nmax, p));
                            }
                        } else {
                            reports.push_back(run_suite(name, nmax, params));
                        }
                    }
                } else if (suite == "conjecture-9.2") {
                    reports.push_back(conjecture1_search(nmax, vk, params));
                } else {
                    reports.push_back(run_suite(suite, nmax, params));
                }
                bool any_failures = false;
                if (format == "csv") {
                    std::string csv;
                    for (std::size_t i = 0; i < reports.size(); ++i) {
                        std::string one = to_csv(reports[i]);
                        if (i > 0) one = one.substr(one.find('\n') + 1);
                        csv += one;
                    }
                    detail::emit(csv, output);
                } else {
                    Json rs = Json::array();
                    for (const auto& r : reports) rs.push_back(to_json(r));
                    out["reports"] = std::move(rs);
                    detail::emit(out.dump(2), output);
                }
                for (const auto& r : reports) any_failures = any_failures || !r.failures.empty();
                if (any_failures) exit_code = 1;
            }
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

} // namespace slq::cli
